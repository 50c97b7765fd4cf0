//! Builders for the standard matroid families and recognition predicates:
//! alternating matroids, vector and digraph matroids, positive
//! orientability, the rank-3 small census, and the corank-2 family.

use crate::chirotope::{chirotope_from_circuits, chirotope_from_vectors, Chirotope};
use crate::error::{OmError, Result};
use crate::ground::GroundSet;
use crate::matroid::{binomial, OrientedMatroid, SubsetsOfSize};
use crate::ratmat::{minimal_dependence, Rat};
use crate::sign::Sign;
use crate::signed_set::{bits, SignedSet};
use num_traits::Signed;

/// A configuration of `n` vectors with exact rational entries.
#[derive(Clone, Debug, PartialEq)]
pub struct VectorConfiguration {
    pub dimension: usize,
    pub columns: Vec<Vec<Rat>>,
    pub labels: Vec<String>,
}

impl VectorConfiguration {
    pub fn new(dimension: usize, columns: Vec<Vec<Rat>>) -> VectorConfiguration {
        let labels = (1..=columns.len()).map(|i| i.to_string()).collect();
        VectorConfiguration {
            dimension,
            columns,
            labels,
        }
    }
}

/// A directed graph with labeled edges; the labels become the ground set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectedGraph {
    pub vertices: usize,
    /// (tail, head) per edge.
    pub edges: Vec<(usize, usize)>,
    pub labels: Vec<String>,
}

impl DirectedGraph {
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>) -> DirectedGraph {
        let labels = (1..=edges.len()).map(|i| i.to_string()).collect();
        DirectedGraph {
            vertices,
            edges,
            labels,
        }
    }
}

/// The alternating oriented matroid `C^{n,d}`: circuits are
/// `(I_odd, I_even)` over all `(d+1)`-subsets `I`.
pub fn alternating(n: usize, d: usize) -> OrientedMatroid {
    assert!(d <= n, "alternating matroid needs 0 ≤ d ≤ n");
    let mut reps = Vec::new();
    if d < n {
        let mut it = SubsetsOfSize::new(n, d + 1);
        while let Some(s) = it.next() {
            let mut plus = 0u64;
            let mut minus = 0u64;
            for (pos, e) in bits(s).enumerate() {
                if pos % 2 == 0 {
                    plus |= 1 << e;
                } else {
                    minus |= 1 << e;
                }
            }
            reps.push(SignedSet::new(plus, minus));
        }
    }
    OrientedMatroid::new_unchecked(GroundSet::numeric(n), reps)
}

/// Oriented matroid of linear dependencies of a rational vector
/// configuration. Minimal dependent subsets are found by rank tests in
/// increasing size; each carries a unique-up-to-scale dependence whose
/// coefficient signs give the circuit.
pub fn from_vectors(config: &VectorConfiguration) -> Result<OrientedMatroid> {
    let n = config.columns.len();
    let ground = GroundSet::new(config.labels.clone())?;
    let refs: Vec<&[Rat]> = config.columns.iter().map(|c| c.as_slice()).collect();
    let mut reps: Vec<SignedSet> = Vec::new();
    let mut dependent_supersets: Vec<u64> = Vec::new();
    for size in 1..=n {
        let mut it = SubsetsOfSize::new(n, size);
        while let Some(s) = it.next() {
            if dependent_supersets.iter().any(|d| d & !s == 0 && *d != s) {
                continue; // contains a smaller dependent set
            }
            let elems: Vec<usize> = bits(s).collect();
            let cols: Vec<&[Rat]> = elems.iter().map(|&i| refs[i]).collect();
            if let Some(dep) = minimal_dependence(&cols, config.dimension) {
                let mut plus = 0u64;
                let mut minus = 0u64;
                for (k, coeff) in dep.iter().enumerate() {
                    if coeff.is_positive() {
                        plus |= 1 << elems[k];
                    } else if coeff.is_negative() {
                        minus |= 1 << elems[k];
                    }
                }
                debug_assert_eq!(plus | minus, s);
                reps.push(SignedSet::new(plus, minus).canonical());
                dependent_supersets.push(s);
            }
        }
    }
    OrientedMatroid::new(ground, reps)
}

/// Graphical oriented matroid of a digraph: circuits correspond to the
/// simple cycles of the underlying graph, signed by agreement with the
/// reference orientation (the digraph itself).
pub fn from_digraph(g: &DirectedGraph) -> Result<OrientedMatroid> {
    let ground = GroundSet::new(g.labels.clone())?;
    let cycles = simple_cycles(g.vertices, &g.edges, 1_000_000)?;
    let mut reps = Vec::new();
    for cyc in cycles {
        let mut plus = 0u64;
        let mut minus = 0u64;
        for (edge_idx, forward) in cyc {
            if forward {
                plus |= 1 << edge_idx;
            } else {
                minus |= 1 << edge_idx;
            }
        }
        reps.push(SignedSet::new(plus, minus).canonical());
    }
    // Self-loops are matroid loops.
    for (i, (t, h)) in g.edges.iter().enumerate() {
        if t == h {
            reps.push(SignedSet::new(1 << i, 0));
        }
    }
    OrientedMatroid::new(ground, reps)
}

/// Enumerates simple cycles of an undirected multigraph as sequences of
/// (edge index, traversed-forward) pairs. Each cycle is produced once:
/// rooted at its smallest vertex, first step along the smaller edge index.
pub fn simple_cycles(
    vertices: usize,
    edges: &[(usize, usize)],
    guard: usize,
) -> Result<Vec<Vec<(usize, bool)>>> {
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); vertices]; // (edge, other endpoint)
    for (i, &(t, h)) in edges.iter().enumerate() {
        if t == h {
            continue;
        }
        adj[t].push((i, h));
        adj[h].push((i, t));
    }
    // Parallel edges form 2-cycles; handled by the same DFS.
    let mut out: Vec<Vec<(usize, bool)>> = Vec::new();
    let mut path: Vec<(usize, bool)> = Vec::new();
    let mut visited = vec![false; vertices];
    for root in 0..vertices {
        dfs(
            root, root, &adj, edges, &mut visited, &mut path, &mut out, guard,
        )?;
    }
    return Ok(out);

    #[allow(clippy::too_many_arguments)]
    fn dfs(
        root: usize,
        at: usize,
        adj: &[Vec<(usize, usize)>],
        edges: &[(usize, usize)],
        visited: &mut Vec<bool>,
        path: &mut Vec<(usize, bool)>,
        out: &mut Vec<Vec<(usize, bool)>>,
        guard: usize,
    ) -> Result<()> {
        visited[at] = true;
        for &(e, next) in &adj[at] {
            if path.last().map(|&(pe, _)| pe) == Some(e) {
                continue; // no immediate backtracking over the same edge
            }
            let forward = edges[e].0 == at;
            if next == root && !path.is_empty() {
                // Close the cycle. Each cycle is rooted at its smallest
                // vertex; of the two traversal directions keep the one
                // whose first root-incident edge has the smaller index.
                path.push((e, forward));
                if path[0].0 < path.last().unwrap().0 {
                    if out.len() >= guard {
                        return Err(OmError::ResourceLimit(format!(
                            "more than {guard} simple cycles"
                        )));
                    }
                    out.push(path.clone());
                }
                path.pop();
                continue;
            }
            if next < root || visited[next] {
                continue;
            }
            path.push((e, forward));
            dfs(root, next, adj, edges, visited, path, out, guard)?;
            path.pop();
        }
        visited[at] = false;
        Ok(())
    }
}

pub use crate::chirotope::{circuits_from_chirotope, chirotope_from_circuits as chirotope_of};

/// Chirotope of a vector configuration (exact determinant signs).
pub fn chirotope_from_config(config: &VectorConfiguration) -> Result<Chirotope> {
    chirotope_from_vectors(&config.columns, config.dimension)
}

/// Witness that a matroid is isomorphic to a positroid: a relabeling and a
/// reorientation after which the chirotope is nonnegative on sorted tuples.
#[derive(Clone, Debug)]
pub struct PositroidWitness {
    pub order: Vec<usize>,
    pub reorient: u64,
}

/// Decides whether `m` is isomorphic to a positively oriented matroid by
/// brute force over element orders and reorientations. Loops never admit a
/// positive orientation witness problem: they are zero in every tuple.
pub fn is_positively_orientable(m: &OrientedMatroid) -> Option<PositroidWitness> {
    let n = m.n_elements();
    let chi = chirotope_from_circuits(m).ok()?;
    if chi.rank == 0 {
        return Some(PositroidWitness {
            order: (0..n).collect(),
            reorient: 0,
        });
    }
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let relabeled = chi.relabeled(&perm);
        if let Some(mask) = nonnegative_reorientation(&relabeled) {
            return Some(PositroidWitness {
                order: perm,
                reorient: mask,
            });
        }
        if !next_permutation(&mut perm) {
            return None;
        }
    }
}

/// Finds a reorientation making the chirotope nonnegative, by propagating
/// forced flips instead of scanning all 2^n masks: fix element 0 unflipped
/// or flipped, then each nonzero tuple constrains flip parities.
fn nonnegative_reorientation(chi: &Chirotope) -> Option<u64> {
    // Parity union-find over elements plus a virtual "global" node g; a
    // tuple T with sign s needs Σ_{e∈T} flip_e ≡ (s == -) (mod 2). That is
    // not pairwise, so fall back to exhaustive search over 2^n with early
    // exit; n ≤ 8 in census use. Loops and elements absent from nonzero
    // tuples are unconstrained.
    let n = chi.n;
    let mut tuples: Vec<(u64, Sign)> = Vec::new();
    let mut it = SubsetsOfSize::new(n, chi.rank);
    while let Some(s) = it.next() {
        let sg = chi.sign_of_mask(s);
        if !sg.is_zero() {
            tuples.push((s, sg));
        }
    }
    'mask: for mask in 0..(1u64 << n) {
        for &(t, s) in &tuples {
            let flipped = (t & mask).count_ones() % 2 == 1;
            let eff = if flipped { -s } else { s };
            if eff == Sign::Minus {
                continue 'mask;
            }
        }
        return Some(mask);
    }
    None
}

fn next_permutation(perm: &mut [usize]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

/// Exact convex-position test for an affine planar diagram given as
/// homogenized vectors `(x, y, 1)`: every point must lie on the boundary
/// of the convex hull (vertices and points on hull edges both count).
///
/// This is the geometric face of the positroid criterion for
/// configurations drawn as affine diagrams; the full existential over
/// rescalings coincides with `is_positively_orientable`.
pub fn convex_position_criterion(config: &VectorConfiguration) -> Result<bool> {
    use crate::ratmat::orient2d;
    use num_traits::One;
    if config.dimension != 3 {
        return Err(OmError::InvalidInput(
            "convex-position criterion needs homogenized planar vectors".into(),
        ));
    }
    if config.columns.iter().any(|v| !v[2].is_one()) {
        return Err(OmError::InvalidInput(
            "convex-position criterion expects affine diagrams with last coordinate 1".into(),
        ));
    }
    let n = config.columns.len();
    let pts: Vec<[Rat; 2]> = config
        .columns
        .iter()
        .map(|v| [v[0].clone(), v[1].clone()])
        .collect();
    // A point is on the hull boundary iff some line through it and
    // another point keeps all points weakly on one side.
    let on_boundary = |i: usize| -> bool {
        if n <= 2 {
            return true;
        }
        'lines: for j in 0..n {
            if i == j || pts[i] == pts[j] {
                continue;
            }
            let mut saw_pos = false;
            let mut saw_neg = false;
            for k in 0..n {
                match orient2d(&pts[i], &pts[j], &pts[k]) {
                    Sign::Plus => saw_pos = true,
                    Sign::Minus => saw_neg = true,
                    Sign::Zero => {}
                }
                if saw_pos && saw_neg {
                    continue 'lines;
                }
            }
            return true;
        }
        // A point coinciding with another inherits its verdict; with all
        // twins removed the loop above already decided it.
        false
    };
    Ok((0..n).all(on_boundary))
}

/// Enumerates one representative per isomorphism class of simple rank-3
/// oriented matroids on `n` elements, by backtracking over chirotope signs
/// with three-term consistency pruning. Every candidate is validated via
/// full circuit axioms before deduplication.
pub fn census_rank3_simple(n: usize) -> Result<Vec<OrientedMatroid>> {
    if n > 7 {
        return Err(OmError::ResourceLimit(format!(
            "rank-3 census supported up to 7 elements, got {n}"
        )));
    }
    if n < 3 {
        return Ok(Vec::new());
    }
    let n_triples = binomial(n, 3);
    // Slot t throughout the search is the triple of lexicographic rank t,
    // matching the sign layout of `Chirotope`.
    let mut triple_masks: Vec<u64> = Vec::with_capacity(n_triples);
    let mut it = SubsetsOfSize::new(n, 3);
    while let Some(s) = it.next() {
        triple_masks.push(s);
    }
    triple_masks.sort_by_key(|&s| crate::chirotope::lex_index(s, n, 3));

    // Three-term consistency constraints: for each anchor a and 4-subset
    // {x1<x2<x3<x4} of the rest, the products χ(a x1 x2)χ(a x3 x4),
    // χ(a x1 x3)χ(a x2 x4), χ(a x1 x4)χ(a x2 x3) enter the Plücker identity
    // p1 - p2 + p3 = 0 and must not be sign-inconsistent.
    let tri_index = |mask: u64| crate::chirotope::lex_index(mask, n, 3);
    let mut constraints: Vec<[(usize, usize); 3]> = Vec::new();
    for a in 0..n {
        let others: Vec<usize> = (0..n).filter(|&x| x != a).collect();
        let m = others.len();
        for i1 in 0..m {
            for i2 in i1 + 1..m {
                for i3 in i2 + 1..m {
                    for i4 in i3 + 1..m {
                        let (x1, x2, x3, x4) =
                            (others[i1], others[i2], others[i3], others[i4]);
                        let t = |p: usize, q: usize| {
                            tri_index((1u64 << a) | (1 << p) | (1 << q))
                        };
                        constraints.push([
                            (t(x1, x2), t(x3, x4)),
                            (t(x1, x3), t(x2, x4)),
                            (t(x1, x4), t(x2, x3)),
                        ]);
                    }
                }
            }
        }
    }
    // Sign of χ on the sorted pair products is unaffected by the anchor's
    // position inside the tuple: both factors of a product carry the same
    // insertion parity twice, which cancels in the product.

    // Zero-structure constraints: among the four triples of any 4-subset,
    // two zeros force all four (the points lie on a line); together with
    // the pinned positive first triple this also rules out loops and
    // parallel pairs, so surviving candidates are simple.
    let mut quads: Vec<[usize; 4]> = Vec::new();
    {
        let mut it4 = SubsetsOfSize::new(n, 4);
        while let Some(q) = it4.next() {
            let mut tris = [0usize; 4];
            for (i, e) in bits(q).enumerate() {
                tris[i] = crate::chirotope::lex_index(q & !(1u64 << e), n, 3);
            }
            quads.push(tris);
        }
    }
    let mut quads_of: Vec<Vec<usize>> = vec![Vec::new(); n_triples];
    for (qi, q) in quads.iter().enumerate() {
        for &t in q {
            quads_of[t].push(qi);
        }
    }

    // Assign triples grouped by their maximum element so that every
    // constraint completes as early as possible: once the triples inside
    // {0..k} are set, all constraints supported there are checkable.
    let mut order: Vec<usize> = (0..n_triples).collect();
    order.sort_by_key(|&t| {
        let mask = triple_masks[t];
        (63 - mask.leading_zeros(), mask)
    });
    let mut position_of = vec![0usize; n_triples];
    for (pos, &t) in order.iter().enumerate() {
        position_of[t] = pos;
    }
    // Constraints become checkable once all six involved entries are set;
    // index them by the latest involved position.
    let mut by_last: Vec<Vec<usize>> = vec![Vec::new(); n_triples];
    for (ci, c) in constraints.iter().enumerate() {
        let last = c
            .iter()
            .flat_map(|&(p, q)| [position_of[p], position_of[q]])
            .max()
            .unwrap();
        by_last[last].push(ci);
    }

    let mut signs: Vec<Option<Sign>> = vec![None; n_triples];
    let mut found: Vec<Chirotope> = Vec::new();
    let ctx = CensusCtx {
        order: &order,
        constraints: &constraints,
        by_last: &by_last,
        quads: &quads,
        quads_of: &quads_of,
        n,
        n_triples,
    };
    assign(&ctx, 0, &mut signs, &mut found);

    struct CensusCtx<'a> {
        order: &'a [usize],
        constraints: &'a [[(usize, usize); 3]],
        by_last: &'a [Vec<usize>],
        quads: &'a [[usize; 4]],
        quads_of: &'a [Vec<usize>],
        n: usize,
        n_triples: usize,
    }

    fn assign(
        ctx: &CensusCtx,
        at: usize,
        signs: &mut Vec<Option<Sign>>,
        found: &mut Vec<Chirotope>,
    ) {
        if at == ctx.n_triples {
            found.push(Chirotope {
                n: ctx.n,
                rank: 3,
                signs: signs.iter().map(|s| s.unwrap()).collect(),
            });
            return;
        }
        // Fix the first triple positive: each class has such a
        // representative (relabel a basis to the front, reorient).
        let options: &[Sign] = if at == 0 {
            &[Sign::Plus]
        } else {
            &[Sign::Plus, Sign::Minus, Sign::Zero]
        };
        let t = ctx.order[at];
        'opts: for &s in options {
            signs[t] = Some(s);
            // Line rule: two zeros and a nonzero inside one 4-subset can
            // never complete to a simple chirotope.
            for &qi in &ctx.quads_of[t] {
                let mut zeros = 0;
                let mut nonzeros = 0;
                for &tt in &ctx.quads[qi] {
                    match signs[tt] {
                        Some(Sign::Zero) => zeros += 1,
                        Some(_) => nonzeros += 1,
                        None => {}
                    }
                }
                if zeros >= 2 && nonzeros >= 1 {
                    continue 'opts;
                }
            }
            // Three-term sign consistency on completed constraints.
            for &ci in &ctx.by_last[at] {
                let c = &ctx.constraints[ci];
                let val = |i: usize| signs[i].unwrap();
                let p1 = val(c[0].0) * val(c[0].1);
                let p2 = val(c[1].0) * val(c[1].1);
                let p3 = val(c[2].0) * val(c[2].1);
                // Terms of p1 - p2 + p3 = 0.
                let terms = [p1, -p2, p3];
                let pos = terms.iter().any(|t| *t == Sign::Plus);
                let neg = terms.iter().any(|t| *t == Sign::Minus);
                let nonzero = terms.iter().filter(|t| !t.is_zero()).count();
                if nonzero > 0 && !(pos && neg) {
                    continue 'opts;
                }
            }
            assign(ctx, at + 1, signs, found);
        }
        signs[t] = None;
    }

    // Cheap filters plus a strong isomorphism-invariant key, then
    // pairwise dedup inside buckets; validate one representative per
    // class (validity is an isomorphism invariant). Chunks are deduped in
    // parallel and merged in order, keeping the result deterministic.
    use rayon::prelude::*;
    let chunk_classes: Vec<std::collections::BTreeMap<Vec<usize>, Vec<OrientedMatroid>>> = found
        .par_chunks(4096)
        .map(|chunk| {
            let mut groups: std::collections::BTreeMap<Vec<usize>, Vec<OrientedMatroid>> =
                Default::default();
            for chi in chunk {
                let m = crate::chirotope::circuits_from_chirotope_unchecked(chi);
                if m.rank() != 3 || !m.is_simple() {
                    continue;
                }
                let key = census_invariant_key(&m, n);
                let bucket = groups.entry(key).or_default();
                if !bucket.iter().any(|c| c.is_isomorphic(&m).is_some()) {
                    bucket.push(m);
                }
            }
            groups
        })
        .collect();
    let mut groups: std::collections::BTreeMap<Vec<usize>, Vec<OrientedMatroid>> =
        Default::default();
    for chunk in chunk_classes {
        for (key, members) in chunk {
            let bucket = groups.entry(key).or_default();
            for m in members {
                if !bucket.iter().any(|c| c.is_isomorphic(&m).is_some()) {
                    bucket.push(m);
                }
            }
        }
    }
    let mut classes: Vec<OrientedMatroid> = groups
        .into_values()
        .flatten()
        .filter(|m| m.validate().passed())
        .collect();
    classes.sort_by(|a, b| a.circuits().cmp(b.circuits()));
    Ok(classes)
}

/// Isomorphism-invariant bucket key: circuit count, support sizes, element
/// degrees, and the multiset of pairwise sign-product signatures. For two
/// circuits the per-element products `X_e·Y_e` survive reorientation, and
/// swapping a representative only exchanges the (agree, disagree) counts.
fn census_invariant_key(m: &OrientedMatroid, n: usize) -> Vec<usize> {
    let circuits = m.circuits();
    let mut key = vec![circuits.len()];
    let mut support_sizes: Vec<usize> = circuits
        .iter()
        .map(|c| c.support().count_ones() as usize)
        .collect();
    support_sizes.sort_unstable();
    key.extend(support_sizes);
    let mut degrees: Vec<usize> = (0..n)
        .map(|e| {
            circuits
                .iter()
                .filter(|c| c.support() & (1 << e) != 0)
                .count()
        })
        .collect();
    degrees.sort_unstable();
    key.extend(degrees);
    // Per-circuit interaction signature.
    let mut colors: Vec<Vec<usize>> = Vec::with_capacity(circuits.len());
    for x in circuits {
        let mut sig: Vec<usize> = circuits
            .iter()
            .map(|y| {
                let agree = ((x.plus & y.plus) | (x.minus & y.minus)).count_ones() as usize;
                let disagree = ((x.plus & y.minus) | (x.minus & y.plus)).count_ones() as usize;
                let (a, b) = (agree.min(disagree), agree.max(disagree));
                a * 64 + b
            })
            .collect();
        sig.sort_unstable();
        colors.push(sig);
    }
    colors.sort();
    for c in colors {
        key.extend(c);
    }
    key
}

/// The rank-4 corank-2 family on six elements: the dual of an acyclic
/// rank-2 configuration whose parallelism classes have sizes `alpha` in
/// affine order. Parts must be at most 3 (no coloops or coparallel pairs
/// in the dual).
pub fn corank2_family(alpha: &[usize]) -> Result<OrientedMatroid> {
    let n: usize = alpha.iter().sum();
    if n > 63 {
        return Err(OmError::TooManyElements(n));
    }
    if alpha.iter().any(|&p| p == 0 || p > 3) {
        return Err(OmError::InvalidInput(
            "composition parts must lie in 1..=3".into(),
        ));
    }
    // Rank-2 configuration: class i sits at affine position t = i+1 as the
    // vector (t, 1), repeated alpha_i times.
    let mut columns = Vec::new();
    for (i, &part) in alpha.iter().enumerate() {
        for _ in 0..part {
            columns.push(vec![
                crate::ratmat::rat_int(i as i64 + 1),
                crate::ratmat::rat_int(1),
            ]);
        }
    }
    let config = VectorConfiguration::new(2, columns);
    let rank2 = from_vectors(&config)?;
    Ok(rank2.dual())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratmat::rat_int;

    #[test]
    fn alternating_circuit_shape() {
        let m = alternating(5, 2);
        // Circuit on I = {1,2,3} (indices 0,1,2) is ({1,3},{2}).
        let c = m
            .circuit_with_support(0b00111)
            .expect("support {0,1,2} present");
        assert_eq!(c.plus, 0b00101);
        assert_eq!(c.minus, 0b00010);
        assert_eq!(m.circuits().len(), 10);
        assert!(m.validate().passed());
    }

    #[test]
    fn alternating_degenerate_is_free() {
        let m = alternating(4, 4);
        assert_eq!(m.circuits().len(), 0);
        assert_eq!(m.rank(), 4);
    }

    #[test]
    fn moment_curve_gives_alternating() {
        let cols = (1..=5)
            .map(|t| vec![rat_int(1), rat_int(t)])
            .collect::<Vec<_>>();
        let m = from_vectors(&VectorConfiguration::new(2, cols)).unwrap();
        assert_eq!(m.circuits(), alternating(5, 2).circuits());
    }

    #[test]
    fn equal_vectors_are_parallel() {
        let cols = vec![
            vec![rat_int(2), rat_int(3)],
            vec![rat_int(2), rat_int(3)],
        ];
        let m = from_vectors(&VectorConfiguration::new(2, cols)).unwrap();
        assert_eq!(m.circuits().len(), 1);
        assert_eq!(m.circuits()[0], SignedSet::new(0b01, 0b10));
    }

    #[test]
    fn tree_digraph_is_free() {
        let g = DirectedGraph::new(4, vec![(0, 1), (1, 2), (1, 3)]);
        let m = from_digraph(&g).unwrap();
        assert_eq!(m.circuits().len(), 0);
        assert_eq!(m.rank(), 3);
    }

    #[test]
    fn k4_cycle_count() {
        let g = DirectedGraph::new(
            4,
            vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
        );
        let m = from_digraph(&g).unwrap();
        // 4 triangles + 3 four-cycles.
        assert_eq!(m.circuits().len(), 7);
        assert!(m.validate().passed());
    }

    #[test]
    fn alternating_chirotope_all_plus() {
        let m = alternating(5, 2);
        let chi = chirotope_from_circuits(&m).unwrap();
        assert!(chi.signs.iter().all(|s| *s == Sign::Plus));
    }

    #[test]
    fn positively_orientable_families() {
        assert!(is_positively_orientable(&alternating(6, 3)).is_some());
        assert!(is_positively_orientable(&alternating(5, 2)).is_some());
    }

    #[test]
    fn composition_guard() {
        assert!(corank2_family(&[4, 1, 1]).is_err());
        assert!(corank2_family(&[0, 3, 3]).is_err());
    }
}
