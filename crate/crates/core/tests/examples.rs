macro_rules! example {
    ($name:ident) => {
        #[allow(dead_code)]
        mod $name {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", stringify!($name), ".rs"));
        }

        #[test]
        fn $name() {
            $name::run_example().unwrap();
        }
    };
}

example!(diagram_arithmetic);
example!(star_action);
example!(specht_combinatorics);
example!(murphy_elements);
example!(x_basis);
example!(filtration_characters);
example!(remark_lattice);
example!(tensor_kernel);
example!(normal_form);
