//! Embedded datasets: sporadic-group orders, and the exceptional-case
//! tables for the linear, unitary and remaining Lie-type families. Rows
//! are stored verbatim, typos included; the verifier recomputes
//! everything and reports disagreements rather than silently fixing
//! them.

/// The 26 sporadic groups plus the Tits group: name, order (decimal),
/// outer automorphism group order.
pub const SPORADIC: &[(&str, &str, u64)] = &[
    ("M11", "7920", 1),
    ("M12", "95040", 2),
    ("M22", "443520", 2),
    ("M23", "10200960", 1),
    ("M24", "244823040", 1),
    ("J1", "175560", 1),
    ("J2", "604800", 2),
    ("J3", "50232960", 2),
    ("J4", "86775571046077562880", 1),
    ("Co1", "4157776806543360000", 1),
    ("Co2", "42305421312000", 1),
    ("Co3", "495766656000", 1),
    ("Fi22", "64561751654400", 2),
    ("Fi23", "4089470473293004800", 1),
    ("Fi24'", "1255205709190661721292800", 2),
    ("HS", "44352000", 2),
    ("McL", "898128000", 2),
    ("He", "4030387200", 2),
    ("Ru", "145926144000", 1),
    ("Suz", "448345497600", 2),
    ("ON", "460815505920", 2),
    ("HN", "273030912000000", 2),
    ("Ly", "51765179004000000", 1),
    ("Th", "90745943887872000", 1),
    ("B", "4154781481226426191177580544000000", 1),
    ("M", "808017424794512875886459904961710757005754368000000000", 1),
    ("2F4(2)'", "17971200", 2),
];

/// Exceptional cases for the linear family A_n(q), q = p^f.
/// Columns: p, n, f, d, |Out|_{2'}, |H1|, |H2|. The first table row only
/// constrains H1 and H2 to divide 2^(n+1)−1 and 2^n−1; those cells carry
/// `None`.
pub struct LinearRow {
    pub p: u64,
    pub n: u32,
    pub f: u32,
    pub d: u64,
    pub out_odd: u64,
    pub h1: Option<u64>,
    pub h2: Option<u64>,
}

pub const TABLE1: &[LinearRow] = &[
    LinearRow { p: 2, n: 3, f: 1, d: 1, out_odd: 1, h1: None, h2: None },
    LinearRow { p: 2, n: 4, f: 1, d: 1, out_odd: 1, h1: None, h2: None },
    LinearRow { p: 2, n: 6, f: 1, d: 1, out_odd: 1, h1: None, h2: None },
    LinearRow { p: 2, n: 8, f: 1, d: 1, out_odd: 1, h1: None, h2: None },
    LinearRow { p: 2, n: 12, f: 1, d: 1, out_odd: 1, h1: None, h2: None },
    LinearRow { p: 2, n: 20, f: 1, d: 1, out_odd: 1, h1: None, h2: None },
    LinearRow { p: 2, n: 2, f: 2, d: 3, out_odd: 3, h1: Some(9), h2: Some(7) },
    LinearRow { p: 2, n: 2, f: 3, d: 1, out_odd: 3, h1: Some(73), h2: Some(7) },
    LinearRow { p: 2, n: 3, f: 2, d: 1, out_odd: 1, h1: Some(7), h2: Some(17) },
    LinearRow { p: 2, n: 2, f: 4, d: 3, out_odd: 3, h1: Some(17), h2: Some(13) },
    LinearRow { p: 2, n: 4, f: 2, d: 1, out_odd: 1, h1: Some(31), h2: Some(17) },
    LinearRow { p: 2, n: 2, f: 6, d: 3, out_odd: 9, h1: Some(73), h2: Some(19) },
    LinearRow { p: 2, n: 3, f: 4, d: 1, out_odd: 1, h1: Some(257), h2: Some(17) },
    LinearRow { p: 2, n: 4, f: 3, d: 1, out_odd: 3, h1: Some(151), h2: Some(31) },
    LinearRow { p: 2, n: 6, f: 2, d: 1, out_odd: 1, h1: Some(127), h2: Some(43) },
    LinearRow { p: 2, n: 2, f: 10, d: 3, out_odd: 15, h1: Some(331), h2: Some(151) },
    LinearRow { p: 2, n: 4, f: 5, d: 1, out_odd: 5, h1: Some(31), h2: Some(11) },
    LinearRow { p: 2, n: 5, f: 4, d: 1, out_odd: 1, h1: Some(31), h2: Some(11) },
    LinearRow { p: 2, n: 10, f: 2, d: 1, out_odd: 1, h1: Some(31), h2: Some(11) },
    LinearRow { p: 3, n: 2, f: 2, d: 1, out_odd: 1, h1: Some(7), h2: Some(5) },
    LinearRow { p: 3, n: 2, f: 3, d: 1, out_odd: 3, h1: Some(13), h2: Some(7) },
    LinearRow { p: 3, n: 3, f: 2, d: 4, out_odd: 1, h1: Some(41), h2: Some(13) },
];

/// Exceptional cases for the unitary family ²A_n(q²), q² = p^f.
/// Columns: p, n, f/2, d, |Out|_{2'}, |H1|, |H2|.
pub struct UnitaryRow {
    pub p: u64,
    pub n: u32,
    pub f_half: u32,
    pub d: u64,
    pub out_odd: u64,
    pub h1: u64,
    pub h2: u64,
}

pub const TABLE2: &[UnitaryRow] = &[
    UnitaryRow { p: 2, n: 3, f_half: 1, d: 1, out_odd: 1, h1: 9, h2: 5 },
    UnitaryRow { p: 2, n: 2, f_half: 2, d: 1, out_odd: 1, h1: 13, h2: 5 },
    UnitaryRow { p: 2, n: 4, f_half: 1, d: 1, out_odd: 1, h1: 13, h2: 5 },
    UnitaryRow { p: 2, n: 2, f_half: 3, d: 3, out_odd: 9, h1: 243, h2: 19 },
    UnitaryRow { p: 2, n: 3, f_half: 2, d: 1, out_odd: 1, h1: 13, h2: 5 },
    UnitaryRow { p: 2, n: 6, f_half: 1, d: 1, out_odd: 1, h1: 43, h2: 7 },
    UnitaryRow { p: 2, n: 2, f_half: 4, d: 1, out_odd: 1, h1: 241, h2: 17 },
    UnitaryRow { p: 2, n: 4, f_half: 2, d: 5, out_odd: 5, h1: 41, h2: 25 },
    UnitaryRow { p: 2, n: 8, f_half: 1, d: 3, out_odd: 3, h1: 19, h2: 17 },
    UnitaryRow { p: 2, n: 2, f_half: 5, d: 3, out_odd: 15, h1: 331, h2: 31 },
    UnitaryRow { p: 2, n: 5, f_half: 2, d: 1, out_odd: 1, h1: 7, h2: 5 },
    UnitaryRow { p: 2, n: 10, f_half: 1, d: 1, out_odd: 1, h1: 31, h2: 11 },
    UnitaryRow { p: 2, n: 2, f_half: 6, d: 1, out_odd: 3, h1: 37, h2: 13 },
    UnitaryRow { p: 2, n: 3, f_half: 4, d: 1, out_odd: 1, h1: 241, h2: 17 },
    UnitaryRow { p: 2, n: 4, f_half: 3, d: 1, out_odd: 3, h1: 13, h2: 11 },
    UnitaryRow { p: 2, n: 6, f_half: 2, d: 1, out_odd: 1, h1: 7, h2: 5 },
    UnitaryRow { p: 2, n: 12, f_half: 1, d: 1, out_odd: 1, h1: 7, h2: 5 },
    UnitaryRow { p: 2, n: 2, f_half: 9, d: 3, out_odd: 27, h1: 87211, h2: 73 },
    UnitaryRow { p: 2, n: 3, f_half: 6, d: 1, out_odd: 3, h1: 37, h2: 13 },
    UnitaryRow { p: 2, n: 6, f_half: 3, d: 1, out_odd: 3, h1: 19, h2: 7 },
    UnitaryRow { p: 2, n: 9, f_half: 2, d: 5, out_odd: 5, h1: 41, h2: 31 },
    UnitaryRow { p: 2, n: 18, f_half: 1, d: 1, out_odd: 1, h1: 19, h2: 7 },
    UnitaryRow { p: 2, n: 2, f_half: 10, d: 1, out_odd: 5, h1: 61, h2: 41 },
    UnitaryRow { p: 2, n: 4, f_half: 5, d: 1, out_odd: 5, h1: 31, h2: 11 },
    UnitaryRow { p: 2, n: 5, f_half: 4, d: 1, out_odd: 1, h1: 13, h2: 9 },
    UnitaryRow { p: 2, n: 10, f_half: 2, d: 1, out_odd: 1, h1: 31, h2: 11 },
    UnitaryRow { p: 2, n: 20, f_half: 1, d: 3, out_odd: 3, h1: 41, h2: 31 },
    UnitaryRow { p: 2, n: 2, f_half: 14, d: 1, out_odd: 7, h1: 127, h2: 43 },
    UnitaryRow { p: 2, n: 4, f_half: 7, d: 1, out_odd: 7, h1: 71, h2: 43 },
    UnitaryRow { p: 2, n: 7, f_half: 4, d: 1, out_odd: 1, h1: 257, h2: 17 },
    UnitaryRow { p: 2, n: 14, f_half: 2, d: 5, out_odd: 5, h1: 41, h2: 17 },
    UnitaryRow { p: 2, n: 28, f_half: 1, d: 1, out_odd: 1, h1: 59, h2: 17 },
    UnitaryRow { p: 3, n: 3, f_half: 1, d: 4, out_odd: 1, h1: 5, h2: 13 },
    UnitaryRow { p: 3, n: 2, f_half: 2, d: 1, out_odd: 1, h1: 73, h2: 5 },
    UnitaryRow { p: 3, n: 4, f_half: 1, d: 1, out_odd: 1, h1: 61, h2: 5 },
    UnitaryRow { p: 3, n: 2, f_half: 3, d: 1, out_odd: 3, h1: 13, h2: 7 },
    UnitaryRow { p: 3, n: 3, f_half: 2, d: 2, out_odd: 1, h1: 73, h2: 41 },
    UnitaryRow { p: 3, n: 6, f_half: 1, d: 1, out_odd: 1, h1: 13, h2: 7 },
    UnitaryRow { p: 5, n: 2, f_half: 2, d: 1, out_odd: 1, h1: 601, h2: 13 },
    UnitaryRow { p: 5, n: 4, f_half: 1, d: 1, out_odd: 1, h1: 3, h2: 313 },
];

/// A listed exceptional cell for a remaining Lie family: (p, f, n), with
/// `p = 0` meaning "every p" and `n = 0` for fixed-rank families.
pub type Cell = (u64, u32, u32);

/// Listed exceptional cells per family, with the field exponent `f` in
/// each family's own convention.
pub struct OtherFamilyData {
    pub family: crate::lie::Family,
    pub listed: &'static [Cell],
}

pub fn other_families() -> Vec<OtherFamilyData> {
    use crate::lie::Family::*;
    vec![
        OtherFamilyData {
            family: B,
            listed: &[(0, 1, 2), (2, 3, 2), (2, 1, 3)],
        },
        OtherFamilyData {
            family: C,
            listed: &[(0, 1, 2), (2, 3, 2), (2, 1, 3)],
        },
        OtherFamilyData {
            family: D,
            listed: &[
                (2, 1, 5),
                (2, 2, 5),
                (2, 1, 3),
                (2, 1, 4),
                (2, 3, 4),
                (3, 1, 4),
                (5, 1, 4),
            ],
        },
        OtherFamilyData {
            family: TwoD,
            listed: &[(3, 2, 3), (3, 2, 4), (5, 2, 4)],
        },
        OtherFamilyData { family: E6, listed: &[] },
        OtherFamilyData { family: E7, listed: &[] },
        OtherFamilyData { family: E8, listed: &[] },
        OtherFamilyData { family: F4, listed: &[] },
        OtherFamilyData {
            family: G2,
            listed: &[(2, 1, 0), (2, 2, 0), (2, 3, 0)],
        },
        OtherFamilyData { family: TwoE6, listed: &[] },
        OtherFamilyData {
            family: ThreeD4,
            listed: &[(2, 3, 0), (2, 5, 0), (2, 7, 0)],
        },
        OtherFamilyData { family: TwoB2, listed: &[] },
        OtherFamilyData { family: TwoF4, listed: &[] },
        OtherFamilyData { family: TwoG2, listed: &[] },
    ]
}
