//! Colocalization enumeration (combinatorial fine zonotopal tilings),
//! tiles and their verification, mutation and flip graphs, and purity
//! decisions over `2^E` and over mutation-closed domains.

use crate::error::{OmError, Result};
use crate::matroid::OrientedMatroid;
use crate::separation::{
    classify_type, collection_of, corank2_cycles, is_colocalization_gp, pair_separated, sigma_of,
    type_iii_completable, Collection, CyclePos, RestrictionType, SignMap,
};
use crate::sign::Sign;
use crate::signed_set::SignedSet;

/// A tile: a boolean interval inside a collection, encoded by its signed
/// vector `X`; the vertices are the sets between `X⁺` and `X⁺ ∪ X⁰`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Tile {
    pub signed_vector: SignedSet,
}

impl Tile {
    pub fn span(&self, full: u64) -> u64 {
        full & !self.signed_vector.support()
    }

    pub fn dim(&self, full: u64) -> usize {
        self.span(full).count_ones() as usize
    }

    pub fn vertices(&self, full: u64) -> Vec<u64> {
        let span = self.span(full);
        let base = self.signed_vector.plus;
        let mut out = Vec::new();
        let mut sub = span;
        loop {
            out.push(base | sub);
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & span;
        }
        out.sort_unstable();
        out
    }
}

/// Enumerates colocalizations in general position, i.e. total sign maps
/// whose restriction to every corank-2 cycle is of Type III.
///
/// Backtracking assigns one circuit pair at a time, preferring circuits
/// that appear in the most partially assigned cycles; a cycle prunes as
/// soon as its partial cyclic pattern has no Type III completion. At most
/// `limit` maps are returned (the search stops past the cap); output is
/// sorted lexicographically on the canonical circuit sign string.
pub fn enumerate_colocalizations(m: &OrientedMatroid, limit: usize) -> Result<Vec<SignMap>> {
    let k = m.circuits().len();
    let cycles = corank2_cycles(m);
    // Per circuit, the cycles it appears in.
    let mut cycles_of: Vec<Vec<usize>> = vec![Vec::new(); k];
    for (ci, cyc) in cycles.iter().enumerate() {
        for &(idx, _) in cyc {
            if !cycles_of[idx].contains(&ci) {
                cycles_of[idx].push(ci);
            }
        }
    }
    let mut values: Vec<Option<Sign>> = vec![None; k];
    let mut out: Vec<SignMap> = Vec::new();
    let mut truncated = false;
    search(
        m,
        &cycles,
        &cycles_of,
        &mut values,
        &mut out,
        limit,
        &mut truncated,
    );
    out.sort();
    return Ok(out);

    fn pick_next(values: &[Option<Sign>], cycles: &[Vec<CyclePos>], cycles_of: &[Vec<usize>]) -> Option<usize> {
        let mut best: Option<(usize, usize)> = None; // (score, index)
        for (idx, v) in values.iter().enumerate() {
            if v.is_some() {
                continue;
            }
            let score = cycles_of[idx]
                .iter()
                .filter(|&&ci| {
                    cycles[ci]
                        .iter()
                        .any(|&(j, _)| values[j].is_some())
                })
                .count();
            match best {
                Some((s, _)) if s >= score => {}
                _ => best = Some((score, idx)),
            }
        }
        best.map(|(_, i)| i)
    }

    fn cycle_ok(values: &[Option<Sign>], cycle: &[CyclePos]) -> bool {
        let pattern: Vec<Option<Sign>> = cycle
            .iter()
            .map(|&(idx, negated)| values[idx].map(|v| if negated { -v } else { v }))
            .collect();
        type_iii_completable(&pattern)
    }

    #[allow(clippy::too_many_arguments)]
    fn search(
        m: &OrientedMatroid,
        cycles: &[Vec<CyclePos>],
        cycles_of: &[Vec<usize>],
        values: &mut Vec<Option<Sign>>,
        out: &mut Vec<SignMap>,
        limit: usize,
        truncated: &mut bool,
    ) {
        if *truncated {
            return;
        }
        let Some(next) = pick_next(values, cycles, cycles_of) else {
            let sigma = SignMap {
                values: values.iter().map(|v| v.unwrap()).collect(),
            };
            debug_assert!(is_colocalization_gp(m, &sigma).is_ok());
            if out.len() >= limit {
                *truncated = true;
                return;
            }
            out.push(sigma);
            return;
        };
        for s in [Sign::Plus, Sign::Minus] {
            values[next] = Some(s);
            if cycles_of[next]
                .iter()
                .all(|&ci| cycle_ok(values, &cycles[ci]))
            {
                search(m, cycles, cycles_of, values, out, limit, truncated);
            }
            values[next] = None;
            if *truncated {
                return;
            }
        }
    }
}

/// Maximal-by-size separated collections: the images `S(σ)` of the
/// enumerated colocalizations.
pub fn max_by_size_collections(m: &OrientedMatroid, limit: usize) -> Result<Vec<Collection>> {
    let sigmas = enumerate_colocalizations(m, limit)?;
    sigmas.iter().map(|s| collection_of(m, s)).collect()
}

/// All tiles of a maximal-by-size collection: boolean intervals fully
/// inside it, found by growing spans from each vertex.
pub fn tiling_of(m: &OrientedMatroid, s: &Collection) -> Vec<Tile> {
    let full = m.ground().full_mask();
    let mut seen: std::collections::BTreeSet<SignedSet> = Default::default();
    for &base in &s.sets {
        // Grow independent spans over elements where the interval stays
        // inside the collection.
        grow(m, s, full, base, 0, 0, &mut seen);
    }
    return seen
        .into_iter()
        .map(|signed_vector| Tile { signed_vector })
        .collect();

    fn grow(
        m: &OrientedMatroid,
        s: &Collection,
        full: u64,
        base: u64,
        span: u64,
        from: usize,
        seen: &mut std::collections::BTreeSet<SignedSet>,
    ) {
        let x = SignedSet::new(base & !span, full & !(base | span));
        seen.insert(x);
        for e in from..m.n_elements() {
            let bit = 1u64 << e;
            if span & bit != 0 || base & bit != 0 {
                continue;
            }
            // The enlarged interval must stay inside the collection.
            let enlarged = span | bit;
            let mut inside = true;
            let mut sub = enlarged;
            loop {
                if !s.contains((base & !enlarged) | sub) {
                    inside = false;
                    break;
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & enlarged;
            }
            if inside {
                grow(m, s, full, base | bit, enlarged, e + 1, seen);
            }
        }
    }
}

/// Report of the structural tiling checks on a maximal-by-size collection.
#[derive(Clone, Debug, Default)]
pub struct TilingReport {
    pub failures: Vec<String>,
}

impl TilingReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Verifies the tile structure of a maximal-by-size collection: spans are
/// independent, every independent set is a span, bases give unique
/// top-dimensional tiles covering everything, the tile graph is an
/// isometric cube subgraph, minors match, and the local unique-tile
/// property holds.
pub fn verify_tiling(m: &OrientedMatroid, s: &Collection) -> TilingReport {
    let mut report = TilingReport::default();
    let full = m.ground().full_mask();
    let tiles = tiling_of(m, s);

    // (1) spans independent.
    for t in &tiles {
        if !m.is_independent(t.span(full)) {
            report
                .failures
                .push(format!("span of {:?} is dependent", t.signed_vector));
        }
    }
    // (2) every independent set is some span.
    let spans: std::collections::BTreeSet<u64> = tiles.iter().map(|t| t.span(full)).collect();
    for ind in m.independent_sets() {
        if !spans.contains(&ind) {
            report.failures.push(format!("no tile spans {ind:#b}"));
        }
    }
    // (3) unique top tile per basis.
    for basis in m.bases() {
        let count = tiles.iter().filter(|t| t.span(full) == basis).count();
        if count != 1 {
            report
                .failures
                .push(format!("basis {basis:#b} spans {count} tiles"));
        }
    }
    // (4) every tile inside a top tile.
    let rank = m.rank();
    let tops: Vec<&Tile> = tiles.iter().filter(|t| t.dim(full) == rank).collect();
    for t in &tiles {
        let inside_top = tops.iter().any(|top| top.signed_vector.leq(&t.signed_vector));
        if !inside_top {
            report
                .failures
                .push(format!("tile {:?} not inside a top tile", t.signed_vector));
        }
    }
    // (5) graph distance equals symmetric difference.
    if let Some(bad) = tile_graph_isometry_failure(s) {
        report.failures.push(bad);
    }
    // (6)/(7) minors via deletion/contraction of the collection. Minor
    // matroids use dense reindexing, so collections shift down past `e`.
    let reindex = |c: &Collection, e: usize| {
        Collection::new(c.sets.iter().map(|&s| shift_down(s, e)).collect())
    };
    for e in 0..m.n_elements() {
        if m.loops() & (1 << e) == 0 {
            let sub = reindex(&s.contract(e), e);
            let msub = m.contract(e).expect("non-loop");
            let derived: std::collections::BTreeSet<SignedSet> = tiles
                .iter()
                .filter(|t| t.span(full) & (1 << e) != 0)
                .map(|t| drop_index(&t.signed_vector, e))
                .collect();
            let direct: std::collections::BTreeSet<SignedSet> = tiling_of(&msub, &sub)
                .into_iter()
                .map(|t| t.signed_vector)
                .collect();
            if derived != direct {
                report
                    .failures
                    .push(format!("contraction tiling mismatch at element {e}"));
            }
        }
        if m.coloops() & (1 << e) == 0 {
            let sub = reindex(&s.delete(e), e);
            let msub = m.delete(e).expect("non-coloop");
            let derived: std::collections::BTreeSet<SignedSet> = tiles
                .iter()
                .map(|t| drop_index(&t.signed_vector, e))
                .collect();
            let direct: std::collections::BTreeSet<SignedSet> = tiling_of(&msub, &sub)
                .into_iter()
                .map(|t| t.signed_vector)
                .collect();
            if derived != direct {
                report
                    .failures
                    .push(format!("deletion tiling mismatch at element {e}"));
            }
        }
    }
    // Local unique-tile property.
    for &set in &s.sets {
        for e in 0..m.n_elements() {
            let flipped = set ^ (1 << e);
            if s.contains(flipped) {
                continue;
            }
            let matching: Vec<&Tile> = tiles
                .iter()
                .filter(|t| {
                    let x = &t.signed_vector;
                    let span = t.span(full);
                    let in_tile = x.plus & !set == 0 && x.minus & set == 0;
                    if !in_tile || span & (1 << e) != 0 {
                        return false;
                    }
                    // Reorienting S to ∅ the circuit is ({e}, span); back
                    // in the original orientation the parts split along S.
                    let (plus, minus) = if set & (1 << e) == 0 {
                        ((span & set) | (1 << e), span & !set)
                    } else {
                        ((span & !set) | (1 << e), span & set)
                    };
                    m.circuit_with_support(plus | minus)
                        .map(|c| {
                            let cand = SignedSet::new(plus, minus);
                            *c == cand.canonical()
                        })
                        .unwrap_or(false)
                })
                .collect();
            if matching.len() != 1 {
                report.failures.push(format!(
                    "local tile count {} at set {set:#b}, element {e}",
                    matching.len()
                ));
            }
        }
    }
    report
}

fn drop_index(x: &SignedSet, e: usize) -> SignedSet {
    let keep: Vec<usize> = (0..64).filter(|&i| i != e).collect();
    x.remapped(&keep)
}

fn shift_down(mask: u64, e: usize) -> u64 {
    (mask & ((1u64 << e) - 1)) | ((mask >> (e + 1)) << e)
}

/// Edges of the tile graph: members at Hamming distance one.
pub fn tile_graph(s: &Collection) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for (a, &x) in s.sets.iter().enumerate() {
        for (b, &y) in s.sets.iter().enumerate().skip(a + 1) {
            if (x ^ y).count_ones() == 1 {
                edges.push((a, b));
            }
        }
    }
    edges
}

/// Checks the isometry property: BFS distance in the tile graph equals
/// symmetric-difference size for all pairs. Returns a description of the
/// first failure.
pub fn tile_graph_isometry_failure(s: &Collection) -> Option<String> {
    let n = s.len();
    let edges = tile_graph(s);
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in &edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    for start in 0..n {
        let mut dist = vec![usize::MAX; n];
        dist[start] = 0;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        for t in 0..n {
            let hamming = (s.sets[start] ^ s.sets[t]).count_ones() as usize;
            if dist[t] != hamming {
                return Some(format!(
                    "distance {} ≠ symmetric difference {} between {:#b} and {:#b}",
                    dist[t], hamming, s.sets[start], s.sets[t]
                ));
            }
        }
    }
    None
}

/// Mutation graph on `2^E`: `S ~ S △ support(C)` whenever `S` orients `C`.
pub struct MutationGraph {
    pub n: usize,
    /// Component id per subset.
    pub component: Vec<usize>,
    pub component_count: usize,
}

impl MutationGraph {
    pub fn members(&self, comp: usize) -> Vec<u64> {
        (0..self.component.len() as u64)
            .filter(|&s| self.component[s as usize] == comp)
            .collect()
    }

    /// Component sizes in decreasing order (ties by smallest member).
    pub fn component_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0usize; self.component_count];
        for &c in &self.component {
            sizes[c] += 1;
        }
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        sizes
    }
}

pub fn mutation_graph(m: &OrientedMatroid) -> MutationGraph {
    let n = m.n_elements();
    let total = 1u64 << n;
    let mut component = vec![usize::MAX; total as usize];
    let mut count = 0;
    for start in 0..total {
        if component[start as usize] != usize::MAX {
            continue;
        }
        let mut queue = std::collections::VecDeque::from([start]);
        component[start as usize] = count;
        while let Some(s) = queue.pop_front() {
            for c in m.circuits() {
                if m.orientation_of(c, s) != Sign::Zero {
                    let t = s ^ c.support();
                    if component[t as usize] == usize::MAX {
                        component[t as usize] = count;
                        queue.push_back(t);
                    }
                }
            }
        }
        count += 1;
    }
    MutationGraph {
        n,
        component,
        component_count: count,
    }
}

/// Flip neighbors of a colocalization: sign maps differing in exactly one
/// circuit pair that are again colocalizations in general position.
pub fn flip_neighbors(m: &OrientedMatroid, sigma: &SignMap) -> Vec<SignMap> {
    let mut out = Vec::new();
    for idx in 0..sigma.values.len() {
        let mut cand = sigma.clone();
        cand.values[idx] = -cand.values[idx];
        if is_colocalization_gp(m, &cand).is_ok() {
            out.push(cand);
        }
    }
    out
}

/// Flip graph over all colocalizations; edges between maps differing in
/// one circuit pair.
pub fn flip_graph(m: &OrientedMatroid, limit: usize) -> Result<(Vec<SignMap>, Vec<(usize, usize)>)> {
    let sigmas = enumerate_colocalizations(m, limit)?;
    let mut edges = Vec::new();
    for (a, x) in sigmas.iter().enumerate() {
        for (b, y) in sigmas.iter().enumerate().skip(a + 1) {
            let diff = x
                .values
                .iter()
                .zip(&y.values)
                .filter(|(u, v)| u != v)
                .count();
            if diff == 1 {
                edges.push((a, b));
            }
        }
    }
    Ok((sigmas, edges))
}

pub fn is_flip_connected(m: &OrientedMatroid, limit: usize) -> Result<bool> {
    let (sigmas, edges) = flip_graph(m, limit)?;
    if sigmas.is_empty() {
        return Ok(true);
    }
    let mut adj = vec![Vec::new(); sigmas.len()];
    for (a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut seen = vec![false; sigmas.len()];
    let mut queue = std::collections::VecDeque::from([0usize]);
    seen[0] = true;
    let mut reached = 1;
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                reached += 1;
                queue.push_back(w);
            }
        }
    }
    Ok(reached == sigmas.len())
}

/// Purity verdict with an optional witness: a maximal-by-inclusion
/// separated collection of submaximal size.
#[derive(Clone, Debug)]
pub enum PurityVerdict {
    Pure { max_size: usize, clique_count: usize },
    NotPure { witness: Collection, max_size: usize },
}

impl PurityVerdict {
    pub fn is_pure(&self) -> bool {
        matches!(self, PurityVerdict::Pure { .. })
    }
}

/// Decides purity by enumerating all maximal cliques of the separation
/// graph on `2^E` with pivoting Bron-Kerbosch; pure iff every maximal
/// clique attains `|Ind(M)| = T(2,1)`.
pub fn purity_check(m: &OrientedMatroid, guard_elements: usize) -> Result<PurityVerdict> {
    let n = m.n_elements();
    if n > guard_elements {
        return Err(OmError::ResourceLimit(format!(
            "purity check guarded at {guard_elements} elements, matroid has {n}"
        )));
    }
    let domain: Vec<u64> = (0..(1u64 << n)).collect();
    domain_purity(m, &domain, usize::MAX)
}

/// Purity restricted to a mutation-closed domain.
pub fn domain_purity_check(
    m: &OrientedMatroid,
    domain: &[u64],
    clique_guard: usize,
) -> Result<PurityVerdict> {
    domain_purity(m, domain, clique_guard)
}

fn domain_purity(m: &OrientedMatroid, domain: &[u64], clique_guard: usize) -> Result<PurityVerdict> {
    let verts = domain.len();
    let words = verts.div_ceil(64);
    let mut adj = vec![0u64; verts * words];
    for a in 0..verts {
        for b in a + 1..verts {
            if pair_separated(m, domain[a], domain[b]) {
                adj[a * words + b / 64] |= 1 << (b % 64);
                adj[b * words + a / 64] |= 1 << (a % 64);
            }
        }
    }
    let mut best: usize = 0;
    let mut worst: Option<Vec<usize>> = None;
    let mut count = 0usize;
    let mut r: Vec<usize> = Vec::new();
    let mut p = vec![0u64; words];
    let mut x = vec![0u64; words];
    for v in 0..verts {
        p[v / 64] |= 1 << (v % 64);
    }
    bron_kerbosch(
        &adj, words, &mut r, &mut p, &mut x, &mut best, &mut worst, &mut count, clique_guard,
    )?;
    // Over all of 2^E the reference size is |Ind|; inside a proper domain
    // the clique maximum is the reference.
    let full_domain = domain.len() == (1usize << m.n_elements())
        && domain.iter().enumerate().all(|(i, &s)| s == i as u64);
    let reference = if full_domain {
        use num_traits::ToPrimitive;
        let ind = m
            .count_independent()
            .to_usize()
            .ok_or_else(|| OmError::ResourceLimit("independent-set count overflow".into()))?;
        assert_eq!(best, ind, "maximum separated size must equal |Ind|");
        ind
    } else {
        best
    };
    let smallest = worst.expect("at least one maximal clique exists");
    if smallest.len() == reference {
        Ok(PurityVerdict::Pure {
            max_size: reference,
            clique_count: count,
        })
    } else {
        Ok(PurityVerdict::NotPure {
            witness: Collection::new(smallest.iter().map(|&i| domain[i]).collect()),
            max_size: reference,
        })
    }
}

#[allow(clippy::too_many_arguments)]
fn bron_kerbosch(
    adj: &[u64],
    words: usize,
    r: &mut Vec<usize>,
    p: &mut Vec<u64>,
    x: &mut Vec<u64>,
    best: &mut usize,
    worst: &mut Option<Vec<usize>>,
    count: &mut usize,
    guard: usize,
) -> Result<()> {
    let p_empty = p.iter().all(|&w| w == 0);
    if p_empty && x.iter().all(|&w| w == 0) {
        *count += 1;
        if *count > guard {
            return Err(OmError::ResourceLimit(format!(
                "more than {guard} maximal cliques"
            )));
        }
        if r.len() > *best {
            *best = r.len();
        }
        match worst {
            Some(w) if w.len() <= r.len() => {}
            _ => *worst = Some(r.clone()),
        }
        return Ok(());
    }
    if p_empty {
        return Ok(());
    }
    // Pivot: vertex of P ∪ X with most neighbors in P.
    let mut pivot = usize::MAX;
    let mut pivot_deg = usize::MAX;
    for w in 0..words {
        let mut cand = p[w] | x[w];
        while cand != 0 {
            let b = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            let v = w * 64 + b;
            let deg: u32 = (0..words)
                .map(|k| (adj[v * words + k] & p[k]).count_ones())
                .sum();
            let deg = deg as usize;
            if pivot == usize::MAX || deg > pivot_deg {
                pivot = v;
                pivot_deg = deg;
                if deg == 0 {
                    // cannot do better than covering nothing
                }
            }
        }
    }
    // Candidates: P minus neighbors of pivot.
    let mut todo: Vec<usize> = Vec::new();
    for w in 0..words {
        let mut cand = p[w] & !adj[pivot * words + w];
        while cand != 0 {
            let b = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            todo.push(w * 64 + b);
        }
    }
    for v in todo {
        let mut np = vec![0u64; words];
        let mut nx = vec![0u64; words];
        for w in 0..words {
            np[w] = p[w] & adj[v * words + w];
            nx[w] = x[w] & adj[v * words + w];
        }
        r.push(v);
        bron_kerbosch(adj, words, r, &mut np, &mut nx, best, worst, count, guard)?;
        r.pop();
        p[v / 64] &= !(1 << (v % 64));
        x[v / 64] |= 1 << (v % 64);
    }
    Ok(())
}

/// Certificate of non-purity without clique search: `s0` is separated and
/// every subset orienting the circuit `c` (either sign) clashes with some
/// member of `s0`.
pub fn bad_collection_certificate(m: &OrientedMatroid, c: &SignedSet, s0: &Collection) -> bool {
    if !crate::separation::is_collection_separated(m, s0) {
        return false;
    }
    let n = m.n_elements();
    for set in 0..(1u64 << n) {
        if m.orientation_of(c, set) == Sign::Zero {
            continue;
        }
        let blocked = s0.sets.iter().any(|&t| !pair_separated(m, set, t));
        if !blocked {
            return false;
        }
    }
    true
}

/// For every enumerated maximal-by-size collection and every mutation
/// component, compares `|S ∩ D|` with the clique maximum inside `D`.
#[derive(Clone, Debug)]
pub struct DomainRestrictionReport {
    pub confirmations: usize,
    pub counterexamples: Vec<(usize, usize, usize)>, // (sigma idx, component, |S∩D|)
}

pub fn domain_restriction_conjecture_check(
    m: &OrientedMatroid,
    limit: usize,
) -> Result<DomainRestrictionReport> {
    let collections = max_by_size_collections(m, limit)?;
    let graph = mutation_graph(m);
    let mut report = DomainRestrictionReport {
        confirmations: 0,
        counterexamples: Vec::new(),
    };
    for comp in 0..graph.component_count {
        let members = graph.members(comp);
        let verdict = domain_purity(m, &members, usize::MAX)?;
        let maximum = match verdict {
            PurityVerdict::Pure { max_size, .. } => max_size,
            PurityVerdict::NotPure { max_size, .. } => max_size,
        };
        for (si, s) in collections.iter().enumerate() {
            let inside = s.sets.iter().filter(|&&v| members.contains(&v)).count();
            if inside == maximum {
                report.confirmations += 1;
            } else {
                report.counterexamples.push((si, comp, inside));
            }
        }
    }
    Ok(report)
}

/// Flip relation on collections: flipping `W` from `+` to `-` replaces
/// each member orienting `W` positively by its mutation.
pub fn flip_mutation_relation_holds(
    m: &OrientedMatroid,
    sigma: &SignMap,
    sigma_flipped: &SignMap,
    w_index: usize,
) -> bool {
    let (sp, sq) = (
        collection_of(m, sigma).expect("small ground set"),
        collection_of(m, sigma_flipped).expect("small ground set"),
    );
    let w = m.circuits()[w_index];
    // Orient the flip so sigma(W) = + and sigma'(W) = -: when sigma has
    // the minus sign, the negated circuit plays the role of W.
    let (sp, sq, w) = if sigma.values[w_index] == Sign::Plus {
        (sp, sq, w)
    } else {
        (sp, sq, w.neg())
    };
    let keep: Vec<u64> = sp
        .sets
        .iter()
        .copied()
        .filter(|&s| m.orientation_of(&w, s) == Sign::Zero)
        .collect();
    let moved: Vec<u64> = sp
        .sets
        .iter()
        .copied()
        .filter(|&s| m.orientation_of(&w, s) == Sign::Plus)
        .map(|s| s ^ w.support())
        .collect();
    let intersection: Vec<u64> = sq
        .sets
        .iter()
        .copied()
        .filter(|s| sp.contains(*s))
        .collect();
    let added: Vec<u64> = sq
        .sets
        .iter()
        .copied()
        .filter(|s| !sp.contains(*s))
        .collect();
    Collection::new(keep) == Collection::new(intersection)
        && Collection::new(moved) == Collection::new(added)
}

/// Convenience: sigma of a collection re-exported for verification flows.
pub fn sigma_roundtrip_holds(m: &OrientedMatroid, sigma: &SignMap) -> bool {
    let s = match collection_of(m, sigma) {
        Ok(s) => s,
        Err(_) => return false,
    };
    match sigma_of(m, &s) {
        Ok(sig) => sig == *sigma,
        Err(_) => false,
    }
}

/// The Las Vergnas type of a sign map restricted to the corank-2 cycle of
/// `a`, exposed for report flows.
pub fn restriction_type(m: &OrientedMatroid, sigma: &SignMap, a: u64) -> Result<RestrictionType> {
    let cycle = crate::separation::corank2_circuit_cycle(m, a)?;
    Ok(classify_type(sigma, &cycle))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::alternating;

    #[test]
    fn hexagon_has_two_tilings() {
        let m = alternating(3, 2);
        let sigmas = enumerate_colocalizations(&m, 100).unwrap();
        assert_eq!(sigmas.len(), 2);
    }

    #[test]
    fn octagon_has_eight_tilings() {
        let m = alternating(4, 2);
        let sigmas = enumerate_colocalizations(&m, 100).unwrap();
        assert_eq!(sigmas.len(), 8);
        for s in &sigmas {
            assert!(is_colocalization_gp(&m, s).is_ok());
        }
    }

    #[test]
    fn free_matroid_mutation_graph_isolated() {
        let m = crate::matroid::OrientedMatroid::new(crate::ground::GroundSet::numeric(4), vec![])
            .unwrap();
        let g = mutation_graph(&m);
        assert_eq!(g.component_count, 16);
    }

    #[test]
    fn double_flip_returns() {
        let m = alternating(4, 2);
        let sigmas = enumerate_colocalizations(&m, 100).unwrap();
        for sigma in &sigmas {
            for nb in flip_neighbors(&m, sigma) {
                let back = flip_neighbors(&m, &nb);
                assert!(back.contains(sigma));
            }
        }
    }
}
