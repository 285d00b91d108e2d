#[path = "../examples/cleaning.rs"]
mod cleaning;
#[path = "../examples/closed_forms.rs"]
mod closed_forms;
#[path = "../examples/command_line.rs"]
mod command_line;
#[path = "../examples/d_invariants.rs"]
mod d_invariants;
#[path = "../examples/face_lattice.rs"]
mod face_lattice;
#[path = "../examples/flag_system.rs"]
mod flag_system;
#[path = "../examples/hodge_numbers.rs"]
mod hodge_numbers;
#[path = "../examples/json_io.rs"]
mod json_io;
#[path = "../examples/linear_algebra.rs"]
mod linear_algebra;
#[path = "../examples/minkowski.rs"]
mod minkowski;
#[path = "../examples/nerve_e2.rs"]
mod nerve_e2;
#[path = "../examples/toric.rs"]
mod toric;

#[test]
fn cleaning_runs() {
    cleaning::run_example().expect("cleaning example");
}

#[test]
fn closed_forms_runs() {
    closed_forms::run_example().expect("closed_forms example");
}

#[test]
fn command_line_runs() {
    command_line::run_example().expect("command_line example");
}

#[test]
fn d_invariants_runs() {
    d_invariants::run_example().expect("d_invariants example");
}

#[test]
fn face_lattice_runs() {
    face_lattice::run_example().expect("face_lattice example");
}

#[test]
fn flag_system_runs() {
    flag_system::run_example().expect("flag_system example");
}

#[test]
fn hodge_numbers_runs() {
    hodge_numbers::run_example().expect("hodge_numbers example");
}

#[test]
fn json_io_runs() {
    json_io::run_example().expect("json_io example");
}

#[test]
fn linear_algebra_runs() {
    linear_algebra::run_example().expect("linear_algebra example");
}

#[test]
fn minkowski_runs() {
    minkowski::run_example().expect("minkowski example");
}

#[test]
fn nerve_e2_runs() {
    nerve_e2::run_example().expect("nerve_e2 example");
}

#[test]
fn toric_runs() {
    toric::run_example().expect("toric example");
}
