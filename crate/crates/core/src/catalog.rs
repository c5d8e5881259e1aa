//! Named bent functions used as ET-class representatives.

use crate::anf::parse_anf;
use crate::boolean_fn::BooleanFunction;

/// A named bent function given by its ANF text.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NamedFunction {
    pub name: &'static str,
    pub n: usize,
    pub anf: &'static str,
}

impl NamedFunction {
    pub fn function(&self) -> BooleanFunction {
        parse_anf(self.anf, self.n).expect("catalog ANF is well formed")
    }
}

const fn named(name: &'static str, n: usize, anf: &'static str) -> NamedFunction {
    NamedFunction { name, n, anf }
}

pub const F2_1: NamedFunction = named("f2,1", 2, "x0*x1");
pub const F4_1: NamedFunction = named("f4,1", 4, "x0*x1 + x2*x3");
pub const F6_1: NamedFunction = named("f6,1", 6, "x0*x1 + x2*x3 + x4*x5");
pub const F6_2: NamedFunction = named("f6,2", 6, "x0*x1*x2 + x0*x3 + x1*x4 + x2*x5");
pub const F6_3: NamedFunction = named(
    "f6,3",
    6,
    "x0*x1*x2 + x0*x1 + x0*x3 + x1*x3*x4 + x1*x5 + x2*x4 + x3*x4",
);
pub const F6_4: NamedFunction = named(
    "f6,4",
    6,
    "x0*x1*x2 + x0*x3 + x1*x3*x4 + x1*x5 + x2*x3*x5 + x2*x3 + x2*x4 + x2*x5 + x3*x4 + x3*x5",
);

pub const DIM6: [NamedFunction; 4] = [F6_1, F6_2, F6_3, F6_4];

pub const DIM8: [NamedFunction; 10] = [
    named("f8,1", 8, "x0*x1 + x2*x3 + x4*x5 + x6*x7"),
    named("f8,2", 8, "x0*x1*x2 + x0*x3 + x1*x4 + x2*x5 + x6*x7"),
    named("f8,3", 8, "x0*x1*x2 + x0*x6 + x1*x3*x4 + x1*x5 + x2*x3 + x4*x7"),
    named("f8,4", 8, "x0*x1*x2 + x0*x2 + x0*x4 + x1*x3*x4 + x1*x5 + x2*x3 + x6*x7"),
    named(
        "f8,5",
        8,
        "x0*x1*x2 + x0*x6 + x1*x3*x4 + x1*x4 + x1*x5 + x2*x3*x5 + x2*x4 + x3*x7",
    ),
    named(
        "f8,6",
        8,
        "x0*x1*x2 + x0*x2 + x0*x3 + x1*x3*x4 + x1*x6 + x2*x3*x5 + x2*x4 + x5*x7",
    ),
    named(
        "f8,7",
        8,
        "x0*x1*x2 + x0*x1 + x0*x2 + x0*x3 + x1*x3*x4 + x1*x4 + x1*x5 + x2*x3*x5 + x2*x4 + x6*x7",
    ),
    named(
        "f8,8",
        8,
        "x0*x1*x2 + x0*x5 + x1*x3*x4 + x1*x6 + x2*x3*x5 + x2*x4 + x3*x7",
    ),
    named(
        "f8,9",
        8,
        "x0*x1*x6 + x0*x3 + x1*x4 + x2*x3*x6 + x2*x5 + x3*x4 + x4*x5*x6 + x6*x7",
    ),
    named(
        "f8,10",
        8,
        "x0*x1*x2 + x0*x3*x6 + x0*x4 + x0*x5 + x1*x3*x4 + x1*x6 + x2*x3*x5 + x2*x4 + x3*x7",
    ),
];

/// Every catalog entry, smallest dimension first.
pub fn all() -> impl Iterator<Item = NamedFunction> {
    [F2_1, F4_1].into_iter().chain(DIM6).chain(DIM8)
}

/// Looks up an entry by name, e.g. `"f6,3"`.
pub fn by_name(name: &str) -> Option<NamedFunction> {
    all().find(|f| f.name == name)
}
