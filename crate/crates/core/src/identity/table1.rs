use super::{parse, IdentityAst};

/// The built-in periodicity identities for `k = 2..5`.
///
/// The k=4 row `g[8i+4]` is kept in its original form even though its
/// second index looks inconsistent; the suite reports its status. The
/// second k=2 row uses `j[2i+2]`: the original `j[2(2i+2)]` already fails
/// at `i = 0`, where `g_4 = 2·j_8 + j_2`.
pub const TABLE1_ROWS: [&str; 14] = [
    "k=2: g[4i+2] = 2*j[2*(4i+2)]",
    "k=2: g[4i+4] = 2*j[2*(4i+4)] + j[2i+2]",
    "k=3: g[6i+2] = 3*j[3*(6i+2)]",
    "k=3: g[6i+4] = 3*j[3*(6i+4)]",
    "k=3: g[6i+6] = 3*j[3*(6i+6)] + j[2i+2]",
    "k=4: g[8i+2] = 4*j[4*(8i+2)]",
    "k=4: g[8i+4] = 4*j[4*(8i+4)] + 2*j[2*(2i+4)]",
    "k=4: g[8i+6] = 4*j[4*(8i+6)]",
    "k=4: g[8i+8] = 4*j[4*(8i+8)] + 2*j[(8i+8)] + j[2i+2]",
    "k=5: g[10i+2] = 5*j[5*(10i+2)]",
    "k=5: g[10i+4] = 5*j[5*(10i+4)]",
    "k=5: g[10i+6] = 5*j[5*(10i+6)]",
    "k=5: g[10i+8] = 5*j[5*(10i+8)]",
    "k=5: g[10i+10] = 5*j[5*(10i+10)] + j[2i+2]",
];

pub fn builtin_table1() -> Vec<IdentityAst> {
    TABLE1_ROWS.iter().map(|row| parse(row).expect("built-in identity parses")).collect()
}
