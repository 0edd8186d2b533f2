macro_rules! example {
    ($name:ident) => {
        #[allow(dead_code)]
        mod $name {
            include!(concat!(
                env!("CARGO_MANIFEST_DIR"),
                "/examples/",
                stringify!($name),
                ".rs"
            ));
        }

        #[test]
        fn $name() {
            $name::run().expect("example should run");
        }
    };
}

example!(build_groups);
example!(centralizers_and_series);
example!(twin_classes);
example!(clique_number);
example!(decide_obstruction);
example!(spectrum);
example!(oracles);
example!(ingest_files);
example!(verify_paper);
