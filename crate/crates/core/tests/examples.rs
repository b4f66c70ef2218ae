//! Every example's `run` must succeed.

macro_rules! example {
    ($name:ident, $path:literal) => {
        #[allow(dead_code)]
        mod $name {
            include!($path);

            #[test]
            fn runs() {
                run().unwrap();
            }
        }
    };
}

example!(bound_quiver, "../examples/bound_quiver.rs");
example!(resolutions, "../examples/resolutions.rs");
example!(ext_and_tor, "../examples/ext_and_tor.rs");
example!(translates, "../examples/translates.rs");
example!(correspondence, "../examples/correspondence.rs");
example!(tower, "../examples/tower.rs");
