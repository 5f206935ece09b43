macro_rules! example {
    ($module:ident, $file:literal, $test:ident) => {
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }

        #[test]
        fn $test() {
            $module::run_example().expect("example should run");
        }
    };
}

example!(quantiles, "quantiles.rs", quantiles_example_runs);
example!(tail_expansions, "tail_expansions.rs", tail_expansions_example_runs);
example!(domain_classification, "domain_classification.rs", domain_classification_example_runs);
example!(record_simulation, "record_simulation.rs", record_simulation_example_runs);
example!(limit_laws, "limit_laws.rs", limit_laws_example_runs);
example!(record_tests, "record_tests.rs", record_tests_example_runs);
