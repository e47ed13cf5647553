//! The universe of connected k-vertex patterns, up to isomorphism.
//!
//! Patterns are identified by their canonical adjacency bitstring: the
//! upper-triangle pairs `(0,1), (0,2), …, (k-2,k-1)` written as `0`/`1`,
//! minimised lexicographically over all `k!` relabelings.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::pattern::{all_permutations, pairs, Pattern, MAX_PATTERN_SIZE};

/// Largest size accepted by [`connected_patterns`].
pub const MAX_MOTIF_SIZE: usize = 6;

/// Packs the upper triangle of `p` after relabeling by `images`, first pair
/// in the most significant bit, so numeric order equals bitstring order.
fn code_under(p: &Pattern, images: &[usize]) -> u32 {
    let n = p.n();
    let mut adj = [0u8; MAX_PATTERN_SIZE];
    for (a, b) in p.edges() {
        let (x, y) = (images[a], images[b]);
        adj[x] |= 1 << y;
        adj[y] |= 1 << x;
    }
    pairs(n).fold(0u32, |acc, (i, j)| acc << 1 | (adj[i] >> j & 1) as u32)
}

fn canonical_code_bits(p: &Pattern) -> u32 {
    all_permutations(p.n())
        .map(|perm| code_under(p, &perm.images().collect::<Vec<_>>()))
        .min()
        .expect("at least the identity")
}

fn bits_to_string(code: u32, n: usize) -> String {
    let len = n * (n - 1) / 2;
    (0..len).rev().map(|b| if code >> b & 1 == 1 { '1' } else { '0' }).collect()
}

fn pattern_from_code(code: u32, n: usize) -> Pattern {
    let len = n * (n - 1) / 2;
    let mut adj = [0u8; MAX_PATTERN_SIZE];
    for (idx, (i, j)) in pairs(n).enumerate() {
        if code >> (len - 1 - idx) & 1 == 1 {
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
        }
    }
    Pattern::from_adjacency_unchecked(n, adj)
}

/// Canonical adjacency bitstring of `p`.
pub fn canonical_code(p: &Pattern) -> String {
    bits_to_string(canonical_code_bits(p), p.n())
}

/// `p` relabeled into its canonical form.
pub fn canonical_form(p: &Pattern) -> Pattern {
    pattern_from_code(canonical_code_bits(p), p.n())
}

/// One canonical representative of every connected `k`-vertex pattern,
/// ordered by canonical bitstring.
///
/// Panics unless `2 <= k <= MAX_MOTIF_SIZE`.
pub fn connected_patterns(k: usize) -> Vec<Pattern> {
    assert!((2..=MAX_MOTIF_SIZE).contains(&k), "motif size {k} outside 2..={MAX_MOTIF_SIZE}");
    let len = k * (k - 1) / 2;
    let mut seen = BTreeMap::new();
    for mask in 0u32..1 << len {
        let candidate = pattern_from_code(mask, k);
        let edges = candidate.edges();
        let Ok(p) = Pattern::new(k, &edges) else { continue };
        seen.entry(canonical_code_bits(&p)).or_insert(());
    }
    seen.into_keys().map(|code| pattern_from_code(code, k)).collect()
}

/// Human-readable name for well-known shapes.
pub fn motif_name(p: &Pattern) -> Option<&'static str> {
    const KNOWN: &[(&str, &str, Option<usize>)] = &[
        ("wedge", "path", Some(3)),
        ("triangle", "triangle", None),
        ("path4", "path", Some(4)),
        ("star4", "star", Some(4)),
        ("rectangle", "rectangle", None),
        ("tailed_triangle", "tailed_triangle", None),
        ("diamond", "clique_minus", Some(4)),
        ("clique4", "clique", Some(4)),
        ("path5", "path", Some(5)),
        ("star5", "star", Some(5)),
        ("pentagon", "pentagon", None),
        ("house", "house", None),
        ("hourglass", "hourglass", None),
        ("clique5_minus", "clique_minus", Some(5)),
        ("clique5", "clique", Some(5)),
    ];
    let code = canonical_code_bits(p);
    KNOWN.iter().find_map(|&(label, name, k)| {
        let known = Pattern::named(name, k).ok()?;
        (known.n() == p.n() && canonical_code_bits(&known) == code).then_some(label)
    })
}
