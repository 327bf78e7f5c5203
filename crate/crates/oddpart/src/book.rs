//! Doctest wiring for the guide: every fenced Rust block in the book
//! chapters compiles and runs under `cargo test --doc`, which keeps the
//! narrative in sync with the library.

macro_rules! chapter {
    ($name:ident, $path:literal) => {
        #[doc = include_str!($path)]
        mod $name {}
    };
}

chapter!(introduction, "../../../book/src/introduction.md");
chapter!(permutation_groups, "../../../book/src/permutation-groups.md");
chapter!(composition_factors, "../../../book/src/composition-factors.md");
chapter!(zsigmondy, "../../../book/src/zsigmondy.md");
chapter!(lie_type, "../../../book/src/lie-type.md");
chapter!(linear_groups, "../../../book/src/linear-groups.md");
chapter!(campaigns, "../../../book/src/campaigns.md");
chapter!(formats, "../../../book/src/formats.md");
