//! Maximum-weight matching via Edmonds' blossom algorithm, following the
//! structure of Galil's O(n³) formulation as popularized by van Rantwijk's
//! reference implementation.
//!
//! Weights are integers; internally they are doubled so that all dual
//! variables stay integral, which keeps the algorithm exact and the tie
//! handling deterministic (ties resolve by input edge order).

const NONE: usize = usize::MAX;

pub struct Matching {
    /// mate[v] = matched partner of v, or usize::MAX
    pub mate: Vec<usize>,
}

struct Ctx {
    nvertex: usize,
    nedge: usize,
    edges: Vec<(usize, usize, i64)>,
    maxcardinality: bool,
    endpoint: Vec<usize>,
    neighbend: Vec<Vec<usize>>,
    mate: Vec<usize>,
    label: Vec<u8>,
    labelend: Vec<usize>,
    inblossom: Vec<usize>,
    blossomparent: Vec<usize>,
    blossomchilds: Vec<Vec<usize>>,
    blossombase: Vec<usize>,
    blossomendps: Vec<Vec<usize>>,
    bestedge: Vec<usize>,
    blossombestedges: Vec<Vec<usize>>,
    unusedblossoms: Vec<usize>,
    dualvar: Vec<i64>,
    allowedge: Vec<bool>,
    queue: Vec<usize>,
}

impl Ctx {
    fn slack(&self, k: usize) -> i64 {
        let (i, j, wt) = self.edges[k];
        self.dualvar[i] + self.dualvar[j] - 2 * wt
    }

    fn blossom_leaves(&self, b: usize, out: &mut Vec<usize>) {
        if b < self.nvertex {
            out.push(b);
        } else {
            for &t in &self.blossomchilds[b].clone() {
                self.blossom_leaves(t, out);
            }
        }
    }

    fn assign_label(&mut self, w: usize, t: u8, p: usize) {
        let b = self.inblossom[w];
        debug_assert!(self.label[w] == 0 && self.label[b] == 0);
        self.label[w] = t;
        self.label[b] = t;
        self.labelend[w] = p;
        self.labelend[b] = p;
        self.bestedge[w] = NONE;
        self.bestedge[b] = NONE;
        if t == 1 {
            let mut leaves = Vec::new();
            self.blossom_leaves(b, &mut leaves);
            self.queue.extend(leaves);
        } else if t == 2 {
            let base = self.blossombase[b];
            debug_assert!(self.mate[base] != NONE);
            let mate_ep = self.mate[base];
            let w2 = self.endpoint[mate_ep];
            self.assign_label(w2, 1, mate_ep ^ 1);
        }
    }

    fn scan_blossom(&mut self, v: usize, w: usize) -> usize {
        let mut path = Vec::new();
        let mut base = NONE;
        let mut v = v;
        let mut w = w;
        loop {
            if v != NONE {
                let mut b = self.inblossom[v];
                if self.label[b] & 4 != 0 {
                    base = self.blossombase[b];
                    break;
                }
                debug_assert_eq!(self.label[b], 1);
                path.push(b);
                self.label[b] = 5;
                debug_assert_eq!(self.labelend[b], self.mate[self.blossombase[b]]);
                if self.labelend[b] == NONE {
                    v = NONE;
                } else {
                    v = self.endpoint[self.labelend[b]];
                    b = self.inblossom[v];
                    debug_assert_eq!(self.label[b], 2);
                    debug_assert!(self.labelend[b] != NONE);
                    v = self.endpoint[self.labelend[b]];
                }
            }
            if w != NONE {
                std::mem::swap(&mut v, &mut w);
            } else if v == NONE {
                break;
            }
        }
        for b in path {
            self.label[b] = 1;
        }
        base
    }

    fn add_blossom(&mut self, base: usize, k: usize) {
        let (mut v, mut w, _) = self.edges[k];
        let bb = self.inblossom[base];
        let mut bv = self.inblossom[v];
        let mut bw = self.inblossom[w];
        let b = self.unusedblossoms.pop().unwrap();
        self.blossombase[b] = base;
        self.blossomparent[b] = NONE;
        self.blossomparent[bb] = b;
        let mut path = Vec::new();
        let mut endps = Vec::new();
        while bv != bb {
            self.blossomparent[bv] = b;
            path.push(bv);
            endps.push(self.labelend[bv]);
            debug_assert!(
                self.label[bv] == 2
                    || (self.label[bv] == 1
                        && self.labelend[bv] == self.mate[self.blossombase[bv]])
            );
            debug_assert!(self.labelend[bv] != NONE);
            v = self.endpoint[self.labelend[bv]];
            bv = self.inblossom[v];
        }
        path.push(bb);
        path.reverse();
        endps.reverse();
        endps.push(2 * k);
        while bw != bb {
            self.blossomparent[bw] = b;
            path.push(bw);
            endps.push(self.labelend[bw] ^ 1);
            debug_assert!(
                self.label[bw] == 2
                    || (self.label[bw] == 1
                        && self.labelend[bw] == self.mate[self.blossombase[bw]])
            );
            debug_assert!(self.labelend[bw] != NONE);
            w = self.endpoint[self.labelend[bw]];
            bw = self.inblossom[w];
        }
        debug_assert_eq!(self.label[bb], 1);
        self.label[b] = 1;
        self.labelend[b] = self.labelend[bb];
        self.dualvar[b] = 0;
        let mut leaves = Vec::new();
        self.blossom_leaves(b, &mut leaves);
        for &leaf in &leaves {
            if self.label[self.inblossom[leaf]] == 2 {
                self.queue.push(leaf);
            }
            self.inblossom[leaf] = b;
        }
        self.blossomchilds[b] = path;
        self.blossomendps[b] = endps;
        // compute best edges to neighbouring blossoms
        let mut bestedgeto = vec![NONE; 2 * self.nvertex];
        for &bv in &self.blossomchilds[b].clone() {
            let nblists: Vec<Vec<usize>> = if self.blossombestedges[bv].is_empty() {
                let mut leaves = Vec::new();
                self.blossom_leaves(bv, &mut leaves);
                leaves
                    .iter()
                    .map(|&v2| self.neighbend[v2].iter().map(|&p| p / 2).collect())
                    .collect()
            } else {
                vec![self.blossombestedges[bv].clone()]
            };
            for nblist in nblists {
                for k2 in nblist {
                    let (mut i, mut j, _) = self.edges[k2];
                    if self.inblossom[j] == b {
                        std::mem::swap(&mut i, &mut j);
                    }
                    let bj = self.inblossom[j];
                    if bj != b
                        && self.label[bj] == 1
                        && (bestedgeto[bj] == NONE
                            || self.slack(k2) < self.slack(bestedgeto[bj]))
                    {
                        bestedgeto[bj] = k2;
                    }
                    let _ = i;
                }
            }
            self.blossombestedges[bv] = Vec::new();
            self.bestedge[bv] = NONE;
        }
        let best: Vec<usize> = bestedgeto.into_iter().filter(|&k2| k2 != NONE).collect();
        self.bestedge[b] = NONE;
        for &k2 in &best {
            if self.bestedge[b] == NONE || self.slack(k2) < self.slack(self.bestedge[b]) {
                self.bestedge[b] = k2;
            }
        }
        self.blossombestedges[b] = best;
    }

    fn expand_blossom(&mut self, b: usize, endstage: bool) {
        let childs = self.blossomchilds[b].clone();
        for &s in &childs {
            self.blossomparent[s] = NONE;
            if s < self.nvertex {
                self.inblossom[s] = s;
            } else if endstage && self.dualvar[s] == 0 {
                self.expand_blossom(s, endstage);
            } else {
                let mut leaves = Vec::new();
                self.blossom_leaves(s, &mut leaves);
                for leaf in leaves {
                    self.inblossom[leaf] = s;
                }
            }
        }
        if !endstage && self.label[b] == 2 {
            // relabel the sub-blossoms along the path from the entry child
            // to the base, opening the traversed edges
            debug_assert!(self.labelend[b] != NONE);
            let endps = self.blossomendps[b].clone();
            let n = childs.len() as isize;
            let wrap = |x: isize| (((x % n) + n) % n) as usize;
            let entrychild = self.inblossom[self.endpoint[self.labelend[b] ^ 1]];
            let mut j = childs.iter().position(|&c| c == entrychild).unwrap() as isize;
            let (jstep, endptrick): (isize, isize) = if j & 1 != 0 {
                j -= n;
                (1, 0)
            } else {
                (-1, 1)
            };
            let mut p = self.labelend[b];
            while j != 0 {
                self.label[self.endpoint[p ^ 1]] = 0;
                let q = endps[wrap(j - endptrick)];
                self.label[self.endpoint[q ^ (endptrick as usize) ^ 1]] = 0;
                let ep = self.endpoint[p ^ 1];
                self.assign_label(ep, 2, p);
                self.allowedge[q / 2] = true;
                j += jstep;
                p = endps[wrap(j - endptrick)] ^ (endptrick as usize);
                self.allowedge[p / 2] = true;
                j += jstep;
            }
            // relabel the base sub-blossom without stepping to its mate
            let bv = childs[wrap(j)];
            let ep = self.endpoint[self.labelend[b] ^ 1];
            self.label[ep] = 2;
            self.label[bv] = 2;
            let le = self.labelend[b];
            self.labelend[ep] = le;
            self.labelend[bv] = le;
            self.bestedge[bv] = NONE;
            // the remaining sub-blossoms keep or lose their labels
            j += jstep;
            while childs[wrap(j)] != entrychild {
                let bv = childs[wrap(j)];
                if self.label[bv] == 1 {
                    j += jstep;
                    continue;
                }
                let mut leaves = Vec::new();
                self.blossom_leaves(bv, &mut leaves);
                let mut v = NONE;
                for leaf in leaves {
                    if self.label[leaf] != 0 {
                        v = leaf;
                        break;
                    }
                }
                if v != NONE {
                    debug_assert_eq!(self.label[v], 2);
                    debug_assert_eq!(self.inblossom[v], bv);
                    self.label[v] = 0;
                    let mate_ep = self.mate[self.blossombase[bv]];
                    self.label[self.endpoint[mate_ep]] = 0;
                    let le = self.labelend[v];
                    self.assign_label(v, 2, le);
                }
                j += jstep;
            }
        }
        self.label[b] = 0;
        self.labelend[b] = NONE;
        self.blossomchilds[b] = Vec::new();
        self.blossomendps[b] = Vec::new();
        self.blossombase[b] = NONE;
        self.blossombestedges[b] = Vec::new();
        self.bestedge[b] = NONE;
        self.unusedblossoms.push(b);
    }

    fn augment_blossom(&mut self, b: usize, v: usize) {
        let mut t = v;
        while self.blossomparent[t] != b {
            t = self.blossomparent[t];
        }
        if t >= self.nvertex {
            self.augment_blossom(t, v);
        }
        let i = self.blossomchilds[b].iter().position(|&c| c == t).unwrap() as isize;
        let nchilds = self.blossomchilds[b].len() as isize;
        let (jstep, endptrick): (isize, usize) = if i & 1 != 0 {
            (1, 0)
        } else {
            (-1, 1)
        };
        let mut j = i;
        if jstep == 1 {
            j -= nchilds;
        }
        let idx = |x: isize| {
            let n = nchilds;
            (((x % n) + n) % n) as usize
        };
        while j != 0 {
            j += jstep;
            let mut t2 = self.blossomchilds[b][idx(j)];
            let p = if jstep == 1 {
                self.blossomendps[b][idx(j)] ^ endptrick
            } else {
                self.blossomendps[b][idx(j - 1)] ^ endptrick
            };
            if t2 >= self.nvertex {
                self.augment_blossom(t2, self.endpoint[p]);
            }
            j += jstep;
            t2 = self.blossomchilds[b][idx(j)];
            if t2 >= self.nvertex {
                self.augment_blossom(t2, self.endpoint[p ^ 1]);
            }
            self.mate[self.endpoint[p]] = p ^ 1;
            self.mate[self.endpoint[p ^ 1]] = p;
        }
        self.blossomchilds[b].rotate_left(idx(i));
        self.blossomendps[b].rotate_left(idx(i));
        self.blossombase[b] = self.blossombase[self.blossomchilds[b][0]];
        debug_assert_eq!(self.blossombase[b], self.blossombase[self.inblossom[v]]);
    }

    fn augment_matching(&mut self, k: usize) {
        let (v, w, _) = self.edges[k];
        for (s0, p0) in [(v, 2 * k + 1), (w, 2 * k)] {
            let mut s = s0;
            let mut p = p0;
            loop {
                let bs = self.inblossom[s];
                debug_assert_eq!(self.label[bs], 1);
                debug_assert_eq!(self.labelend[bs], self.mate[self.blossombase[bs]]);
                if bs >= self.nvertex {
                    self.augment_blossom(bs, s);
                }
                self.mate[s] = p;
                if self.labelend[bs] == NONE {
                    break;
                }
                let t = self.endpoint[self.labelend[bs]];
                let bt = self.inblossom[t];
                debug_assert_eq!(self.label[bt], 2);
                debug_assert!(self.labelend[bt] != NONE);
                s = self.endpoint[self.labelend[bt]];
                let j = self.endpoint[self.labelend[bt] ^ 1];
                debug_assert_eq!(self.blossombase[bt], t);
                if self.inblossom[j] >= self.nvertex {
                    self.augment_blossom(self.inblossom[j], j);
                }
                self.mate[j] = self.labelend[bt];
                p = self.labelend[bt] ^ 1;
            }
        }
    }
}

/// Maximum-weight matching of an undirected weighted graph.
///
/// With `maxcardinality` the result is a maximum-weight matching among the
/// maximum-cardinality ones.
pub fn max_weight_matching(
    nvertex: usize,
    edges: &[(usize, usize, i64)],
    maxcardinality: bool,
) -> Matching {
    if edges.is_empty() || nvertex == 0 {
        return Matching {
            mate: vec![NONE; nvertex],
        };
    }
    // double weights so duals stay integral
    let edges: Vec<(usize, usize, i64)> = edges
        .iter()
        .map(|&(i, j, w)| (i, j, 2 * w))
        .collect();
    let nedge = edges.len();
    let maxweight = edges.iter().map(|&(_, _, w)| w).max().unwrap().max(0);
    let mut endpoint = Vec::with_capacity(2 * nedge);
    for &(i, j, _) in &edges {
        endpoint.push(i);
        endpoint.push(j);
    }
    let mut neighbend: Vec<Vec<usize>> = vec![Vec::new(); nvertex];
    for (k, &(i, j, _)) in edges.iter().enumerate() {
        neighbend[i].push(2 * k + 1);
        neighbend[j].push(2 * k);
    }
    let mut ctx = Ctx {
        nvertex,
        nedge,
        edges,
        maxcardinality,
        endpoint,
        neighbend,
        mate: vec![NONE; nvertex],
        label: vec![0; 2 * nvertex],
        labelend: vec![NONE; 2 * nvertex],
        inblossom: (0..nvertex).collect(),
        blossomparent: vec![NONE; 2 * nvertex],
        blossomchilds: vec![Vec::new(); 2 * nvertex],
        blossombase: (0..nvertex).chain(std::iter::repeat(NONE).take(nvertex)).collect(),
        blossomendps: vec![Vec::new(); 2 * nvertex],
        bestedge: vec![NONE; 2 * nvertex],
        blossombestedges: vec![Vec::new(); 2 * nvertex],
        unusedblossoms: (nvertex..2 * nvertex).collect(),
        dualvar: std::iter::repeat(maxweight)
            .take(nvertex)
            .chain(std::iter::repeat(0).take(nvertex))
            .collect(),
        allowedge: vec![false; nedge],
        queue: Vec::new(),
    };

    for _ in 0..nvertex {
        ctx.label = vec![0; 2 * ctx.nvertex];
        ctx.bestedge = vec![NONE; 2 * ctx.nvertex];
        for v in ctx.nvertex..2 * ctx.nvertex {
            ctx.blossombestedges[v] = Vec::new();
        }
        ctx.allowedge = vec![false; ctx.nedge];
        ctx.queue = Vec::new();
        for v in 0..ctx.nvertex {
            if ctx.mate[v] == NONE && ctx.label[ctx.inblossom[v]] == 0 {
                ctx.assign_label(v, 1, NONE);
            }
        }
        let mut augmented = false;
        'stage: loop {
            while let Some(v) = ctx.queue.pop() {
                debug_assert_eq!(ctx.label[ctx.inblossom[v]], 1);
                for pi in 0..ctx.neighbend[v].len() {
                    let p = ctx.neighbend[v][pi];
                    let k = p / 2;
                    let w = ctx.endpoint[p];
                    if ctx.inblossom[v] == ctx.inblossom[w] {
                        continue;
                    }
                    let mut kslack = 0;
                    if !ctx.allowedge[k] {
                        kslack = ctx.slack(k);
                        if kslack <= 0 {
                            ctx.allowedge[k] = true;
                        }
                    }
                    if ctx.allowedge[k] {
                        if ctx.label[ctx.inblossom[w]] == 0 {
                            ctx.assign_label(w, 2, p ^ 1);
                        } else if ctx.label[ctx.inblossom[w]] == 1 {
                            let base = ctx.scan_blossom(v, w);
                            if base != NONE {
                                ctx.add_blossom(base, k);
                            } else {
                                ctx.augment_matching(k);
                                augmented = true;
                                break 'stage;
                            }
                        } else if ctx.label[w] == 0 {
                            debug_assert_eq!(ctx.label[ctx.inblossom[w]], 2);
                            ctx.label[w] = 2;
                            ctx.labelend[w] = p ^ 1;
                        }
                    } else if ctx.label[ctx.inblossom[w]] == 1 {
                        let b = ctx.inblossom[v];
                        if ctx.bestedge[b] == NONE || kslack < ctx.slack(ctx.bestedge[b]) {
                            ctx.bestedge[b] = k;
                        }
                    } else if ctx.label[w] == 0
                        && (ctx.bestedge[w] == NONE || kslack < ctx.slack(ctx.bestedge[w]))
                    {
                        ctx.bestedge[w] = k;
                    }
                }
            }
            // no augmenting path found in this substage: adjust duals
            let mut deltatype = -1;
            let mut delta = 0i64;
            let mut deltaedge = NONE;
            let mut deltablossom = NONE;
            if !ctx.maxcardinality {
                deltatype = 1;
                delta = ctx.dualvar[..ctx.nvertex].iter().copied().min().unwrap().max(0);
            }
            for v in 0..ctx.nvertex {
                if ctx.label[ctx.inblossom[v]] == 0 && ctx.bestedge[v] != NONE {
                    let d = ctx.slack(ctx.bestedge[v]);
                    if deltatype == -1 || d < delta {
                        delta = d;
                        deltatype = 2;
                        deltaedge = ctx.bestedge[v];
                    }
                }
            }
            for b in 0..2 * ctx.nvertex {
                if ctx.blossomparent[b] == NONE && ctx.label[b] == 1 && ctx.bestedge[b] != NONE {
                    let kslack = ctx.slack(ctx.bestedge[b]);
                    debug_assert_eq!(kslack % 2, 0);
                    let d = kslack / 2;
                    if deltatype == -1 || d < delta {
                        delta = d;
                        deltatype = 3;
                        deltaedge = ctx.bestedge[b];
                    }
                }
            }
            for b in ctx.nvertex..2 * ctx.nvertex {
                if ctx.blossombase[b] != NONE
                    && ctx.blossomparent[b] == NONE
                    && ctx.label[b] == 2
                    && (deltatype == -1 || ctx.dualvar[b] < delta)
                {
                    delta = ctx.dualvar[b];
                    deltatype = 4;
                    deltablossom = b;
                }
            }
            if deltatype == -1 {
                debug_assert!(ctx.maxcardinality);
                deltatype = 1;
                delta = ctx.dualvar[..ctx.nvertex].iter().copied().min().unwrap().max(0);
            }
            for v in 0..ctx.nvertex {
                match ctx.label[ctx.inblossom[v]] {
                    1 => ctx.dualvar[v] -= delta,
                    2 => ctx.dualvar[v] += delta,
                    _ => {}
                }
            }
            for b in ctx.nvertex..2 * ctx.nvertex {
                if ctx.blossombase[b] != NONE && ctx.blossomparent[b] == NONE {
                    match ctx.label[b] {
                        1 => ctx.dualvar[b] += delta,
                        2 => ctx.dualvar[b] -= delta,
                        _ => {}
                    }
                }
            }
            match deltatype {
                1 => break 'stage,
                2 => {
                    ctx.allowedge[deltaedge] = true;
                    let (i, j, _) = ctx.edges[deltaedge];
                    let v = if ctx.label[ctx.inblossom[i]] == 0 { j } else { i };
                    debug_assert_eq!(ctx.label[ctx.inblossom[v]], 1);
                    ctx.queue.push(v);
                }
                3 => {
                    ctx.allowedge[deltaedge] = true;
                    let (i, _, _) = ctx.edges[deltaedge];
                    debug_assert_eq!(ctx.label[ctx.inblossom[i]], 1);
                    ctx.queue.push(i);
                }
                4 => ctx.expand_blossom(deltablossom, false),
                _ => unreachable!(),
            }
        }
        if !augmented {
            break;
        }
        for b in ctx.nvertex..2 * ctx.nvertex {
            if ctx.blossomparent[b] == NONE
                && ctx.blossombase[b] != NONE
                && ctx.label[b] == 1
                && ctx.dualvar[b] == 0
            {
                ctx.expand_blossom(b, true);
            }
        }
    }

    let mut mate = vec![NONE; nvertex];
    for v in 0..nvertex {
        if ctx.mate[v] != NONE {
            mate[v] = ctx.endpoint[ctx.mate[v]];
        }
    }
    for v in 0..nvertex {
        debug_assert!(mate[v] == NONE || mate[mate[v]] == v);
    }
    Matching { mate }
}

/// Minimum-weight perfect matching on a graph with non-negative integer
/// weights. The graph must admit a perfect matching (callers pass complete
/// graphs over an even vertex count). Returns matched pairs `(u, v)` with
/// `u < v`.
pub fn min_weight_perfect_matching(
    nvertex: usize,
    edges: &[(usize, usize, i64)],
) -> Vec<(usize, usize)> {
    let wmax = edges.iter().map(|&(_, _, w)| w).max().unwrap_or(0);
    let flipped: Vec<(usize, usize, i64)> = edges
        .iter()
        .map(|&(i, j, w)| (i, j, wmax + 1 - w))
        .collect();
    let m = max_weight_matching(nvertex, &flipped, true);
    let mut pairs = Vec::new();
    for v in 0..nvertex {
        let w = m.mate[v];
        assert!(w != NONE, "graph has no perfect matching");
        if v < w {
            pairs.push((v, w));
        }
    }
    pairs
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    fn total_weight(edges: &[(usize, usize, i64)], pairs: &[(usize, usize)]) -> i64 {
        pairs
            .iter()
            .map(|&(u, v)| {
                edges
                    .iter()
                    .find(|&&(i, j, _)| (i, j) == (u, v) || (j, i) == (u, v))
                    .unwrap()
                    .2
            })
            .sum()
    }

    fn brute_force_min(nvertex: usize, edges: &[(usize, usize, i64)]) -> i64 {
        // enumerate all perfect matchings recursively
        fn rec(
            remaining: &mut Vec<usize>,
            wt: &std::collections::HashMap<(usize, usize), i64>,
            acc: i64,
            best: &mut i64,
        ) {
            if remaining.is_empty() {
                *best = (*best).min(acc);
                return;
            }
            let u = remaining[0];
            for i in 1..remaining.len() {
                let v = remaining[i];
                if let Some(&w) = wt.get(&(u.min(v), u.max(v))) {
                    let mut rest: Vec<usize> = remaining.clone();
                    rest.remove(i);
                    rest.remove(0);
                    rec(&mut rest, wt, acc + w, best);
                }
            }
        }
        let wt: std::collections::HashMap<(usize, usize), i64> = edges
            .iter()
            .map(|&(i, j, w)| ((i.min(j), i.max(j)), w))
            .collect();
        let mut best = i64::MAX;
        rec(&mut (0..nvertex).collect(), &wt, 0, &mut best);
        best
    }

    #[test]
    fn simple_max_weight_cases() {
        // single edge
        let m = max_weight_matching(2, &[(0, 1, 5)], false);
        assert_eq!(m.mate[0], 1);
        // prefers the heavy middle edge over two light ones
        let m = max_weight_matching(4, &[(0, 1, 2), (1, 2, 11), (2, 3, 5)], false);
        assert_eq!(m.mate[1], 2);
        assert_eq!(m.mate[0], usize::MAX);
        // with maxcardinality the two outer edges win
        let m = max_weight_matching(4, &[(0, 1, 2), (1, 2, 11), (2, 3, 5)], true);
        assert_eq!(m.mate[0], 1);
        assert_eq!(m.mate[2], 3);
    }

    #[test]
    fn blossom_cases_from_reference() {
        // create blossom, relabel as T in more than one way
        let edges = [
            (1, 2, 45),
            (1, 5, 45),
            (2, 3, 50),
            (3, 4, 45),
            (4, 5, 50),
            (1, 6, 30),
            (3, 9, 35),
            (4, 8, 35),
            (5, 7, 26),
            (9, 10, 5),
        ];
        let m = max_weight_matching(11, &edges, false);
        assert_eq!(m.mate[1], 6);
        assert_eq!(m.mate[2], 3);
        assert_eq!(m.mate[4], 8);
        assert_eq!(m.mate[5], 7);
        assert_eq!(m.mate[9], 10);
        // nested S-blossom, relabel as S
        let edges = [
            (1, 2, 40),
            (1, 3, 40),
            (2, 3, 60),
            (2, 4, 55),
            (3, 5, 55),
            (4, 5, 50),
            (1, 8, 15),
            (5, 7, 30),
            (7, 6, 10),
            (8, 10, 10),
            (4, 9, 30),
        ];
        let m = max_weight_matching(11, &edges, false);
        assert_eq!(m.mate[1], 2);
        assert_eq!(m.mate[3], 5);
        assert_eq!(m.mate[4], 9);
        assert_eq!(m.mate[7], 6);
        assert_eq!(m.mate[8], 10);
    }

    #[test]
    fn sblossom_expansion_cases() {
        // S-blossom, relabel as T-blossom, expand
        let edges = [
            (1, 2, 50),
            (1, 3, 45),
            (2, 3, 45),
            (3, 4, 95),
            (4, 6, 94),
            (5, 6, 94),
            (6, 7, 50),
            (1, 8, 30),
            (3, 11, 35),
            (5, 9, 36),
            (7, 10, 26),
            (11, 12, 5),
        ];
        let m = max_weight_matching(13, &edges, false);
        assert_eq!(m.mate[1], 8);
        assert_eq!(m.mate[2], 3);
        assert_eq!(m.mate[4], 6);
        assert_eq!(m.mate[5], 9);
        assert_eq!(m.mate[7], 10);
        assert_eq!(m.mate[11], 12);
    }

    #[test]
    fn nasty_blossom_augmenting_path() {
        // nested blossom expands, leading to an augmenting path through it
        let edges = [
            (1, 2, 45),
            (1, 7, 45),
            (2, 3, 50),
            (3, 4, 45),
            (4, 5, 95),
            (4, 6, 94),
            (5, 6, 94),
            (6, 7, 50),
            (1, 8, 30),
            (3, 11, 35),
            (5, 9, 36),
            (7, 10, 26),
            (11, 12, 5),
        ];
        let m = max_weight_matching(13, &edges, false);
        assert_eq!(m.mate[1], 8);
        assert_eq!(m.mate[2], 3);
        assert_eq!(m.mate[4], 6);
        assert_eq!(m.mate[5], 9);
        assert_eq!(m.mate[7], 10);
        assert_eq!(m.mate[11], 12);
    }

    #[test]
    fn min_weight_perfect_matches_brute_force() {
        // random complete graphs up to 12 vertices against enumeration
        let mut rng = crate::rng::stream_rng(99, crate::rng::Stream::Shot, 0);
        for trial in 0..60 {
            let n = 2 * (1 + (trial % 6));
            let mut edges = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    edges.push((i, j, rng.random_range(0..1000i64)));
                }
            }
            let pairs = min_weight_perfect_matching(n, &edges);
            assert_eq!(pairs.len(), n / 2);
            let got = total_weight(&edges, &pairs);
            let want = brute_force_min(n, &edges);
            assert_eq!(got, want, "n={n} trial={trial}");
        }
    }

    #[test]
    fn constant_weight_shift_preserves_matched_pairs() {
        let mut rng = crate::rng::stream_rng(7, crate::rng::Stream::Shot, 1);
        for _ in 0..20 {
            let n = 8;
            let mut edges = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    edges.push((i, j, rng.random_range(0..500i64)));
                }
            }
            let base = min_weight_perfect_matching(n, &edges);
            let shifted: Vec<_> = edges.iter().map(|&(i, j, w)| (i, j, w + 137)).collect();
            let moved = min_weight_perfect_matching(n, &shifted);
            assert_eq!(base, moved);
        }
    }
}
