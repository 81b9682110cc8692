//! Transcribed result tables.
//!
//! `Poly(numerators, d)` stands for `(a_0 phi^k + a_1 phi^(k-1) + ... + a_k) / (d phi^k)`
//! with the numerators listed from the highest power down, exactly as printed.
//! `Terms` lists `c_0, c_1, ...` for rows printed as `c_0 + c_1/phi + ...`.
//! `GcdPoly` covers rows that carry a gcd symbol `g = (p, r)`: numerator
//! `j` is `with_gcd[j] * g + plain[j]` and the denominator is `d * g`; it is
//! split into concrete rows at load time.

use super::RClass::{self, *};
use crate::family::FamilyId;

pub(super) enum Src {
    Poly(&'static [u64], u64),
    Terms(&'static [(u64, u64)]),
    GcdPoly {
        prime: u64,
        with_gcd: &'static [u64],
        plain: &'static [u64],
        den: u64,
    },
}

pub(super) struct RowSrc {
    pub e: u64,
    pub r_class: RClass,
    pub phi_index: u32,
    pub coeffs: Src,
}

const fn row(e: u64, r_class: RClass, phi_index: u32, coeffs: Src) -> RowSrc {
    RowSrc {
        e,
        r_class,
        phi_index,
        coeffs,
    }
}

use Src::{GcdPoly, Poly, Terms};

const TW_F4: &[RowSrc] = &[
    row(1, Any, 1, Terms(&[(7, 16), (1, 2), (1, 16)])),
    row(2, Eq(3), 2, Terms(&[(89, 144), (1, 4), (1, 48)])),
    row(2, Above(3), 2, Terms(&[(35, 48), (1, 4), (1, 48)])),
    row(4, Any, 4, Terms(&[(77, 96), (3, 16), (1, 96)])),
    row(6, Any, 6, Terms(&[(5, 6), (1, 6)])),
    row(12, Any, 12, Terms(&[(11, 12), (1, 12)])),
];

const TW_B2: &[RowSrc] = &[
    row(1, Any, 1, Terms(&[(1, 2), (1, 2)])),
    row(4, Any, 4, Terms(&[(3, 4), (1, 4)])),
];

const TRI_D4: &[RowSrc] = &[
    row(1, TwoQ1Mod4, 1, Poly(&[17, 12, 4], 48)),
    row(1, TwoQ3Mod4, 2, Poly(&[17, 12, 4], 48)),
    row(1, Eq(3), 1, Poly(&[82, 72, 6], 216)),
    row(1, Above(3), 1, Poly(&[10, 12, 2], 24)),
    row(2, Eq(3), 2, Poly(&[82, 72, 6], 216)),
    row(2, Above(3), 2, Poly(&[10, 12, 2], 24)),
    row(3, Any, 3, Poly(&[15, 8, 1], 24)),
    row(6, Any, 6, Poly(&[15, 8, 1], 24)),
    row(12, Any, 12, Poly(&[3, 1], 4)),
];

const F4_R2: &[u64] = &[3577, 3696, 1672, 192, 16];
const F4_R3: &[u64] = &[3337, 3816, 1326, 216, 9];
const F4_GEN: &[u64] = &[385, 552, 190, 24, 1];

const F4: &[RowSrc] = &[
    row(1, TwoQ1Mod4, 1, Poly(F4_R2, 18432)),
    row(1, TwoQ3Mod4, 2, Poly(F4_R2, 18432)),
    row(1, Eq(3), 1, Poly(F4_R3, 10368)),
    row(1, Above(3), 1, Poly(F4_GEN, 1152)),
    row(2, Eq(3), 2, Poly(F4_R3, 10368)),
    row(2, Above(3), 2, Poly(F4_GEN, 1152)),
    row(3, Any, 3, Poly(&[55, 16, 1], 72)),
    row(4, Any, 4, Poly(&[77, 18, 1], 96)),
    row(6, Any, 6, Poly(&[55, 16, 1], 72)),
    row(8, Any, 8, Poly(&[7, 1], 8)),
    row(12, Any, 12, Poly(&[11, 1], 12)),
];

// Printed as (9 phi^2 + 2 phi^2 + 18 phi + 3) / 36 phi^2 and
// (3 phi^2 + 2 phi^2 + 6 phi + 1) / 12 phi^2; like terms combined.
const G2_R3: &[u64] = &[9 + 2, 18, 3];
const G2_GEN: &[u64] = &[3 + 2, 6, 1];

const G2: &[RowSrc] = &[
    row(1, TwoQ1Mod4, 1, Poly(&[17, 12, 4], 48)),
    row(1, TwoQ3Mod4, 2, Poly(&[17, 12, 4], 48)),
    row(1, Eq(3), 1, Poly(G2_R3, 36)),
    row(1, Above(3), 1, Poly(G2_GEN, 12)),
    row(2, Eq(3), 2, Poly(G2_R3, 36)),
    row(2, Above(3), 2, Poly(G2_GEN, 12)),
    row(3, Any, 3, Poly(&[5, 1], 6)),
    row(6, Any, 6, Poly(&[5, 1], 6)),
];

const E6_R2_SPLIT: &[u64] = &[179840, 131292, 113709, 19080, 4920, 288, 16];
const E6_R2_NONSPLIT: &[u64] = &[17557, 12024, 3928, 288, 16];
const E6_R3: &[u64] = &[110240, 489348, 303003, 71280, 9450, 972, 27];
const E6_R5: &[u64] = &[61600, 90684, 44709, 18000, 2550, 180, 5];
const E6_GEN: &[u64] = &[12320, 22284, 13089, 3600, 510, 36, 1];
const E6_E3: &[u64] = &[440, 183, 24, 1];

const E6: &[RowSrc] = &[
    row(1, TwoQ1Mod4, 1, Poly(E6_R2_SPLIT, 829440)),
    row(1, TwoQ3Mod4, 2, Poly(E6_R2_NONSPLIT, 73728)),
    row(1, Eq(3), 1, Poly(E6_R3, 1399680)),
    row(1, Eq(5), 1, Poly(E6_R5, 259200)),
    row(1, Above(5), 1, Poly(E6_GEN, 51840)),
    row(2, Eq(3), 2, Poly(F4_R3, 10368)),
    row(2, Above(3), 2, Poly(F4_GEN, 1152)),
    row(3, Any, 3, Poly(E6_E3, 648)),
    row(4, Any, 4, Poly(&[77, 18, 1], 96)),
    row(5, Any, 5, Poly(&[4, 1], 5)),
    row(6, Any, 6, Poly(&[55, 16, 1], 72)),
    row(8, Any, 8, Poly(&[7, 1], 8)),
    row(9, Any, 9, Poly(&[8, 1], 9)),
    row(12, Any, 12, Poly(&[11, 1], 12)),
];

const TW_E6: &[RowSrc] = &[
    row(1, TwoQ1Mod4, 1, Poly(E6_R2_NONSPLIT, 73728)),
    row(1, TwoQ3Mod4, 2, Poly(E6_R2_SPLIT, 829440)),
    row(1, Eq(3), 1, Poly(F4_R3, 10368)),
    row(1, Above(3), 1, Poly(F4_GEN, 1152)),
    row(2, Eq(3), 2, Poly(E6_R3, 1399680)),
    row(2, Eq(5), 2, Poly(E6_R5, 259200)),
    row(2, Above(5), 2, Poly(E6_GEN, 51840)),
    row(3, Any, 3, Poly(&[55, 16, 1], 72)),
    row(4, Any, 4, Poly(&[77, 18, 1], 96)),
    row(6, Any, 6, Poly(E6_E3, 648)),
    row(8, Any, 8, Poly(&[7, 1], 8)),
    row(10, Any, 10, Poly(&[4, 1], 5)),
    row(12, Any, 12, Poly(&[11, 1], 12)),
    row(18, Any, 18, Poly(&[8, 1], 9)),
];

const E7_R2: &[u64] = &[
    41419665, 95510014, 30219588, 10204152, 952560, 116256, 4032, 128,
];
const E7_R3: &[u64] = &[
    20191815, 23513057, 12786039, 3532473, 405405, 31563, 1701, 27,
];
const E7_R5: &[u64] = &[3828825, 6047743, 2739177, 621159, 108675, 8085, 315, 5];
const E7_R7: &[u64] = &[5360355, 7764581, 4647699, 1140573, 152145, 11319, 441, 7];
const E7_GEN: &[u64] = &[765765, 1286963, 663957, 162939, 21735, 1617, 63, 1];
const E7_E3: &[u64] = &[935, 327, 33, 1];

const E7: &[RowSrc] = &[
    row(1, TwoQ1Mod4, 1, Poly(E7_R2, 371589120)),
    row(1, TwoQ3Mod4, 2, Poly(E7_R2, 371589120)),
    row(1, Eq(3), 1, Poly(E7_R3, 78382080)),
    row(1, Eq(5), 1, Poly(E7_R5, 14515200)),
    row(1, Eq(7), 1, Poly(E7_R7, 20321280)),
    row(1, Above(7), 1, Poly(E7_GEN, 2903040)),
    row(2, Eq(3), 2, Poly(E7_R3, 78382080)),
    row(2, Eq(5), 2, Poly(E7_R5, 14515200)),
    row(2, Eq(7), 2, Poly(E7_R7, 20321280)),
    row(2, Above(7), 2, Poly(E7_GEN, 2903040)),
    row(3, Any, 3, Poly(E7_E3, 1296)),
    row(4, Any, 4, Poly(&[77, 18, 1], 96)),
    row(5, Any, 5, Poly(&[9, 1], 10)),
    row(6, Any, 6, Poly(E7_E3, 1296)),
    row(7, Any, 7, Poly(&[13, 1], 14)),
    row(8, Any, 8, Poly(&[7, 1], 8)),
    row(9, Any, 9, Poly(&[17, 1], 18)),
    row(10, Any, 10, Poly(&[9, 1], 10)),
    row(12, Any, 12, Poly(&[11, 1], 12)),
    row(14, Any, 14, Poly(&[13, 1], 14)),
    row(18, Any, 18, Poly(&[17, 1], 18)),
];

const E8_R2: &[u64] = &[
    41492380321,
    27525566640,
    16480551440,
    2132907840,
    295921248,
    14434560,
    815360,
    15360,
    256,
];
const E8_R3: &[u64] = &[
    16277566921,
    21789381960,
    7567769940,
    1361503080,
    159928398,
    8913240,
    366660,
    9720,
    81,
];
const E8_R5: &[u64] = &[
    5363541841,
    7507077000,
    2845718900,
    501215400,
    53801790,
    4095000,
    150500,
    3000,
    25,
];
const E8_R7: &[u64] = &[
    1509595087,
    2115252600,
    761301260,
    172854360,
    18315906,
    1146600,
    42140,
    840,
    7,
];
const E8_GEN: &[u64] = &[
    215656441, 323507400, 130085780, 24693480, 2616558, 163800, 6020, 120, 1,
];
const E8_E3: &[u64] = &[124729, 28400, 2310, 80, 1];
const E8_E5: &[u64] = &[551, 48, 1];

// e = 4: (31345 phi^4 (5,r) + 2304 phi^4 + 11100 phi^3 (5,r) + 1270 phi^2 (5,r)
//         + 60 phi (5,r) + (5,r)) / 46080 phi^4 (5,r)
const E8_E4: Src = GcdPoly {
    prime: 5,
    with_gcd: &[31345, 11100, 1270, 60, 1],
    plain: &[2304, 0, 0, 0, 0],
    den: 46080,
};

const E8: &[RowSrc] = &[
    row(1, TwoQ1Mod4, 1, Poly(E8_R2, 178362777600)),
    row(1, TwoQ3Mod4, 2, Poly(E8_R2, 178362777600)),
    row(1, Eq(3), 1, Poly(E8_R3, 56435097600)),
    row(1, Eq(5), 1, Poly(E8_R5, 17418240000)),
    row(1, Eq(7), 1, Poly(E8_R7, 4877107200)),
    row(1, Above(7), 1, Poly(E8_GEN, 696729600)),
    row(2, Eq(3), 2, Poly(E8_R3, 56435097600)),
    row(2, Eq(5), 2, Poly(E8_R5, 17418240000)),
    row(2, Eq(7), 2, Poly(E8_R7, 4877107200)),
    row(2, Above(7), 2, Poly(E8_GEN, 696729600)),
    row(3, Any, 3, Poly(E8_E3, 155520)),
    row(4, Any, 4, E8_E4),
    row(5, Any, 5, Poly(E8_E5, 600)),
    row(6, Any, 6, Poly(E8_E3, 155520)),
    row(7, Any, 7, Poly(&[13, 1], 14)),
    row(8, Any, 8, Poly(&[161, 30, 1], 192)),
    row(9, Any, 9, Poly(&[17, 1], 18)),
    row(10, Any, 10, Poly(E8_E5, 600)),
    row(12, Any, 12, Poly(&[253, 34, 1], 288)),
    row(14, Any, 14, Poly(&[13, 1], 14)),
    row(15, Any, 15, Poly(&[29, 1], 30)),
    row(18, Any, 18, Poly(&[17, 1], 18)),
    row(20, Any, 20, Poly(&[19, 1], 20)),
    row(24, Any, 24, Poly(&[23, 1], 24)),
    row(30, Any, 30, Poly(&[29, 1], 30)),
];

// e = 1, r = 2 is printed as 7/12 + 1/6 (q+1)_2, i.e. phi = phi_{2,2}.
const TW_G2: &[RowSrc] = &[
    row(1, Two, 2, Terms(&[(7, 12), (1, 6)])),
    row(1, Above(3), 1, Terms(&[(1, 2), (1, 2)])),
    row(2, Any, 2, Terms(&[(5, 6), (1, 6)])),
    row(6, Any, 6, Terms(&[(5, 6), (1, 6)])),
];

pub(super) fn source(family: FamilyId) -> &'static [RowSrc] {
    match family {
        FamilyId::TwF4 => TW_F4,
        FamilyId::TwB2 => TW_B2,
        FamilyId::TriD4 => TRI_D4,
        FamilyId::F4 => F4,
        FamilyId::G2 => G2,
        FamilyId::E6 => E6,
        FamilyId::TwE6 => TW_E6,
        FamilyId::E7 => E7,
        FamilyId::E8 => E8,
        FamilyId::TwG2 => TW_G2,
    }
}
