//! Finite spectral spaces as posets carrying three topologies.
//!
//! With `p <= q` read as "q specializes p", the Zariski opens are the
//! down-sets, the flat opens are the up-sets, and the patch opens are all
//! subsets. Everything here is decided exhaustively on the finite carrier.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TopologyKind {
    Zariski,
    Flat,
    Patch,
}

/// A finite poset of points with string labels; the order matrix is stored
/// reflexively and transitively closed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralSpace {
    labels: Vec<String>,
    le: Vec<Vec<bool>>,
}

/// Maximum number of points for exhaustive open-set enumeration.
const MAX_POINTS: usize = 20;

impl SpectralSpace {
    /// Builds a space from an order relation given as index pairs `(i, j)`
    /// meaning `i <= j`. The reflexive/transitive closure is applied;
    /// antisymmetry violations are rejected.
    pub fn from_order(labels: Vec<String>, relations: &[(usize, usize)]) -> Result<SpectralSpace> {
        let n = labels.len();
        if n > MAX_POINTS {
            return Err(Error::Poset(format!(
                "at most {MAX_POINTS} points supported, got {n}"
            )));
        }
        let mut le = vec![vec![false; n]; n];
        for i in 0..n {
            le[i][i] = true;
        }
        for &(i, j) in relations {
            if i >= n || j >= n {
                return Err(Error::Poset(format!("relation ({i},{j}) out of range")));
            }
            le[i][j] = true;
        }
        // transitive closure
        for k in 0..n {
            for i in 0..n {
                if le[i][k] {
                    for j in 0..n {
                        if le[k][j] {
                            le[i][j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && le[i][j] && le[j][i] {
                    return Err(Error::Poset(format!(
                        "antisymmetry violated between {} and {}",
                        labels[i], labels[j]
                    )));
                }
            }
        }
        Ok(SpectralSpace { labels, le })
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.le[i][j]
    }

    pub fn down_set(&self, i: usize) -> u64 {
        let mut m = 0u64;
        for j in 0..self.n() {
            if self.le[j][i] {
                m |= 1 << j;
            }
        }
        m
    }

    pub fn up_set(&self, i: usize) -> u64 {
        let mut m = 0u64;
        for j in 0..self.n() {
            if self.le[i][j] {
                m |= 1 << j;
            }
        }
        m
    }

    pub fn maximal_points(&self) -> Vec<usize> {
        (0..self.n())
            .filter(|&i| (0..self.n()).all(|j| !self.le[i][j] || i == j))
            .collect()
    }

    pub fn minimal_points(&self) -> Vec<usize> {
        (0..self.n())
            .filter(|&i| (0..self.n()).all(|j| !self.le[j][i] || i == j))
            .collect()
    }

    fn is_downset(&self, mask: u64) -> bool {
        (0..self.n()).all(|j| mask & (1 << j) == 0 || self.down_set(j) & !mask == 0)
    }

    fn is_upset(&self, mask: u64) -> bool {
        (0..self.n()).all(|j| mask & (1 << j) == 0 || self.up_set(j) & !mask == 0)
    }

    pub fn is_open(&self, mask: u64, topology: TopologyKind) -> bool {
        match topology {
            TopologyKind::Zariski => self.is_downset(mask),
            TopologyKind::Flat => self.is_upset(mask),
            TopologyKind::Patch => true,
        }
    }

    pub fn is_closed(&self, mask: u64, topology: TopologyKind) -> bool {
        let full = self.full_mask();
        self.is_open(full & !mask, topology)
    }

    fn full_mask(&self) -> u64 {
        if self.n() == 64 {
            u64::MAX
        } else {
            (1u64 << self.n()) - 1
        }
    }

    /// All opens of the given topology as bitmasks, ascending.
    pub fn opens(&self, topology: TopologyKind) -> Vec<u64> {
        let full = self.full_mask();
        (0..=full)
            .filter(|&m| self.is_open(m, topology))
            .collect()
    }

    /// Closure of a single point.
    pub fn closure(&self, point: usize, topology: TopologyKind) -> Vec<usize> {
        let mask = match topology {
            TopologyKind::Zariski => self.up_set(point),
            TopologyKind::Flat => self.down_set(point),
            TopologyKind::Patch => 1u64 << point,
        };
        mask_points(mask)
    }

    /// Minimal open neighborhood of a point; finite spaces always have one.
    pub fn minimal_open(&self, point: usize, topology: TopologyKind) -> u64 {
        match topology {
            TopologyKind::Zariski => self.down_set(point),
            TopologyKind::Flat => self.up_set(point),
            TopologyKind::Patch => 1u64 << point,
        }
    }

    /// Hausdorff and normality, decided exhaustively, with failure
    /// witnesses.
    pub fn separation(&self, topology: TopologyKind) -> SeparationReport {
        let mut hausdorff = true;
        let mut hausdorff_witness = None;
        'outer: for x in 0..self.n() {
            for y in (x + 1)..self.n() {
                if self.minimal_open(x, topology) & self.minimal_open(y, topology) != 0 {
                    hausdorff = false;
                    hausdorff_witness = Some((x, y));
                    break 'outer;
                }
            }
        }
        // all closed sets of the topology
        let full = self.full_mask();
        let closeds: Vec<u64> = (0..=full)
            .filter(|&m| self.is_closed(m, topology))
            .collect();
        let open_hull = |m: u64| -> u64 {
            let mut hull = 0u64;
            for x in mask_points(m) {
                hull |= self.minimal_open(x, topology);
            }
            hull
        };
        let mut normal = true;
        let mut normal_witness = None;
        'pairs: for (i, &e) in closeds.iter().enumerate() {
            if e == 0 {
                continue;
            }
            for &f in closeds.iter().skip(i + 1) {
                if f == 0 || e & f != 0 {
                    continue;
                }
                // every open containing a closed set contains its open hull
                if open_hull(e) & open_hull(f) != 0 {
                    normal = false;
                    normal_witness = Some((mask_points(e), mask_points(f)));
                    break 'pairs;
                }
            }
        }
        SeparationReport {
            hausdorff,
            normal,
            hausdorff_witness,
            normal_witness,
        }
    }

    /// Connected components of the comparability graph; identical for the
    /// Zariski and flat topologies.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let mut stack = vec![start];
            comp[start] = count;
            while let Some(x) = stack.pop() {
                for y in 0..n {
                    if comp[y] == usize::MAX && (self.le[x][y] || self.le[y][x]) {
                        comp[y] = count;
                        stack.push(y);
                    }
                }
            }
            count += 1;
        }
        let mut out = vec![Vec::new(); count];
        for (x, &c) in comp.iter().enumerate() {
            out[c].push(x);
        }
        out
    }

    /// Same points, reversed order.
    pub fn hochster_dual(&self) -> SpectralSpace {
        let n = self.n();
        let mut le = vec![vec![false; n]; n];
        for i in 0..n {
            for j in 0..n {
                le[i][j] = self.le[j][i];
            }
        }
        SpectralSpace {
            labels: self.labels.clone(),
            le,
        }
    }

    /// Equivalence classes generated by "two points share an upper bound"
    /// (the order-level reading of two primes spanning a proper ideal).
    pub fn r_classes(&self) -> Vec<Vec<usize>> {
        self.classes_by(|x, y| (0..self.n()).any(|k| self.le[x][k] && self.le[y][k]))
    }

    /// Dual classes generated by "two points share a lower bound".
    pub fn s_classes(&self) -> Vec<Vec<usize>> {
        self.classes_by(|x, y| (0..self.n()).any(|k| self.le[k][x] && self.le[k][y]))
    }

    fn classes_by(&self, related: impl Fn(usize, usize) -> bool) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                let root = find(parent, parent[x]);
                parent[x] = root;
            }
            parent[x]
        }
        for x in 0..n {
            for y in (x + 1)..n {
                if related(x, y) {
                    let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                    if rx != ry {
                        parent[rx.max(ry)] = rx.min(ry);
                    }
                }
            }
        }
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut index: Vec<Option<usize>> = vec![None; n];
        for x in 0..n {
            let root = find(&mut parent, x);
            match index[root] {
                Some(k) => classes[k].push(x),
                None => {
                    index[root] = Some(classes.len());
                    classes.push(vec![x]);
                }
            }
        }
        classes
    }

    /// The canonical retraction onto the maximal (resp. minimal) points, if
    /// each point lies under (resp. over) exactly one of them, with
    /// continuity checked against the matching topology.
    pub fn retraction(&self, target: RetractionTarget) -> RetractionOutcome {
        let (targets, topology) = match target {
            RetractionTarget::Max => (self.maximal_points(), TopologyKind::Zariski),
            RetractionTarget::Min => (self.minimal_points(), TopologyKind::Flat),
        };
        let mut map = Vec::with_capacity(self.n());
        for x in 0..self.n() {
            let over: Vec<usize> = targets
                .iter()
                .copied()
                .filter(|&t| match target {
                    RetractionTarget::Max => self.le[x][t],
                    RetractionTarget::Min => self.le[t][x],
                })
                .collect();
            match over.len() {
                1 => map.push(over[0]),
                _ => {
                    return RetractionOutcome::NoUnique {
                        point: x,
                        targets: over,
                    }
                }
            }
        }
        let continuous = self.is_continuous_into_subspace(&map, &targets, topology);
        RetractionOutcome::Map { map, continuous }
    }

    /// Every map from the space onto the target subset that fixes the subset
    /// pointwise and is continuous for the matching topology.
    pub fn all_retractions(&self, target: RetractionTarget) -> Vec<Vec<usize>> {
        let (targets, topology) = match target {
            RetractionTarget::Max => (self.maximal_points(), TopologyKind::Zariski),
            RetractionTarget::Min => (self.minimal_points(), TopologyKind::Flat),
        };
        let is_target: Vec<bool> = {
            let mut v = vec![false; self.n()];
            for &t in &targets {
                v[t] = true;
            }
            v
        };
        let free: Vec<usize> = (0..self.n()).filter(|&x| !is_target[x]).collect();
        let mut out = Vec::new();
        let mut assignment = vec![0usize; free.len()];
        loop {
            let mut map: Vec<usize> = (0..self.n()).collect();
            for (slot, &x) in free.iter().enumerate() {
                map[x] = targets[assignment[slot]];
            }
            if self.is_continuous_into_subspace(&map, &targets, topology) {
                out.push(map);
            }
            // advance the mixed-radix assignment
            let mut i = 0;
            loop {
                if i == free.len() {
                    return out;
                }
                assignment[i] += 1;
                if assignment[i] < targets.len() {
                    break;
                }
                assignment[i] = 0;
                i += 1;
            }
            if targets.is_empty() {
                return out;
            }
        }
    }

    /// Preimages of relative opens of the subspace must be open.
    fn is_continuous_into_subspace(
        &self,
        map: &[usize],
        subspace: &[usize],
        topology: TopologyKind,
    ) -> bool {
        let sub_mask: u64 = subspace.iter().fold(0, |m, &t| m | 1 << t);
        let mut rel_opens: Vec<u64> = self
            .opens(topology)
            .into_iter()
            .map(|o| o & sub_mask)
            .collect();
        rel_opens.sort_unstable();
        rel_opens.dedup();
        for rel in rel_opens {
            let mut pre = 0u64;
            for (x, &img) in map.iter().enumerate() {
                if rel & (1 << img) != 0 {
                    pre |= 1 << x;
                }
            }
            if !self.is_open(pre, topology) {
                return false;
            }
        }
        true
    }

    /// Relative opens induced on a subset, as masks within the subset.
    pub fn relative_opens(&self, subset: &[usize], topology: TopologyKind) -> Vec<u64> {
        let mut out: Vec<u64> = self
            .opens(topology)
            .into_iter()
            .map(|o| {
                let mut rel = 0u64;
                for (k, &x) in subset.iter().enumerate() {
                    if o & (1 << x) != 0 {
                        rel |= 1 << k;
                    }
                }
                rel
            })
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Opens of the quotient by a partition: sets of classes whose union is
    /// open. Returned as masks over class indices.
    pub fn quotient_opens(&self, classes: &[Vec<usize>], topology: TopologyKind) -> Vec<u64> {
        let k = classes.len();
        let mut out = Vec::new();
        for m in 0..(1u64 << k) {
            let mut union = 0u64;
            for (c, class) in classes.iter().enumerate() {
                if m & (1 << c) != 0 {
                    for &x in class {
                        union |= 1 << x;
                    }
                }
            }
            if self.is_open(union, topology) {
                out.push(m);
            }
        }
        out
    }

    /// Whether the map sending each source point to its class is a
    /// homeomorphism from the induced topology on `subspace` onto the
    /// quotient space of the partition.
    pub fn subspace_to_quotient_homeo(
        &self,
        subspace: &[usize],
        classes: &[Vec<usize>],
        topology: TopologyKind,
    ) -> bool {
        // bijectivity: each class contains exactly one subspace point
        let mut class_of = vec![usize::MAX; self.n()];
        for (c, class) in classes.iter().enumerate() {
            for &x in class {
                class_of[x] = c;
            }
        }
        let mut seen = vec![false; classes.len()];
        for &x in subspace {
            let c = class_of[x];
            if seen[c] {
                return false;
            }
            seen[c] = true;
        }
        if seen.iter().any(|s| !s) {
            return false;
        }
        // open-set correspondence through the bijection
        let rel_opens = self.relative_opens(subspace, topology);
        let quo_opens = self.quotient_opens(classes, topology);
        let to_class_mask = |rel: u64| -> u64 {
            let mut m = 0u64;
            for (k, &x) in subspace.iter().enumerate() {
                if rel & (1 << k) != 0 {
                    m |= 1 << class_of[x];
                }
            }
            m
        };
        let images: Vec<u64> = rel_opens.iter().map(|&r| to_class_mask(r)).collect();
        let mut sorted_images = images.clone();
        sorted_images.sort_unstable();
        sorted_images.dedup();
        sorted_images == quo_opens
    }

    /// The induced space on a subset of points.
    pub fn subspace(&self, points: &[usize]) -> SpectralSpace {
        let labels: Vec<String> = points.iter().map(|&x| self.labels[x].clone()).collect();
        let mut relations = Vec::new();
        for (a, &x) in points.iter().enumerate() {
            for (b, &y) in points.iter().enumerate() {
                if self.le[x][y] {
                    relations.push((a, b));
                }
            }
        }
        SpectralSpace::from_order(labels, &relations).expect("induced order is a poset")
    }

    pub fn is_antichain(&self) -> bool {
        (0..self.n()).all(|i| (0..self.n()).all(|j| i == j || !self.le[i][j]))
    }

    /// Classification against the space-level clauses of the three
    /// characterization groups.
    pub fn classify(&self) -> SpaceClassification {
        let maxes = self.maximal_points();
        let mins = self.minimal_points();
        let r_classes = self.r_classes();
        let class_of = |x: usize| -> usize {
            r_classes
                .iter()
                .position(|c| c.contains(&x))
                .expect("partition covers the space")
        };

        // unique maximal above / unique minimal below
        let unique_max = (0..self.n()).all(|x| {
            maxes.iter().filter(|&&m| self.le[x][m]).count() == 1
        });
        let unique_min = (0..self.n()).all(|x| {
            mins.iter().filter(|&&m| self.le[m][x]).count() == 1
        });

        let gelfand = vec![
            ("i".to_string(), unique_max),
            (
                "ii".to_string(),
                maxes.iter().all(|&m| {
                    let class: Vec<usize> = r_classes[class_of(m)].clone();
                    let lambda = mask_points(self.down_set(m));
                    class == lambda
                }),
            ),
            (
                "v".to_string(),
                matches!(
                    self.retraction(RetractionTarget::Max),
                    RetractionOutcome::Map { continuous: true, .. }
                ),
            ),
            ("vi".to_string(), self.separation(TopologyKind::Zariski).normal),
            (
                "viii".to_string(),
                maxes
                    .iter()
                    .all(|&m| self.is_closed(self.down_set(m), TopologyKind::Zariski)),
            ),
            (
                "xi".to_string(),
                self.subspace_to_quotient_homeo(&maxes, &r_classes, TopologyKind::Zariski),
            ),
        ];

        let mp = vec![
            ("i".to_string(), unique_min),
            (
                "iv".to_string(),
                mins.iter().all(|&p| {
                    let class: Vec<usize> = r_classes[class_of(p)].clone();
                    let v = mask_points(self.up_set(p));
                    class == v
                }),
            ),
            (
                "v".to_string(),
                matches!(
                    self.retraction(RetractionTarget::Min),
                    RetractionOutcome::Map { continuous: true, .. }
                ),
            ),
            ("vi".to_string(), self.separation(TopologyKind::Flat).normal),
            (
                "vii".to_string(),
                mins.iter()
                    .all(|&p| self.is_closed(self.up_set(p), TopologyKind::Flat)),
            ),
            (
                "viii".to_string(),
                self.subspace_to_quotient_homeo(&mins, &r_classes, TopologyKind::Flat),
            ),
        ];

        let zariski_opens = self.opens(TopologyKind::Zariski);
        let zero_dim = vec![
            ("i".to_string(), self.is_antichain()),
            (
                "iii".to_string(),
                self.separation(TopologyKind::Zariski).hausdorff,
            ),
            (
                "iv".to_string(),
                zariski_opens == self.opens(TopologyKind::Patch),
            ),
            (
                "v".to_string(),
                self.separation(TopologyKind::Flat).hausdorff,
            ),
            (
                "vi".to_string(),
                zariski_opens == self.opens(TopologyKind::Flat),
            ),
            (
                "x".to_string(),
                self.s_classes().iter().all(|c| c.len() == 1),
            ),
        ];

        SpaceClassification {
            gelfand,
            mp,
            zero_dim,
        }
    }

    pub fn to_json(&self) -> PosetJson {
        let mut le = Vec::new();
        for i in 0..self.n() {
            for j in 0..self.n() {
                if i != j && self.le[i][j] {
                    le.push([self.labels[i].clone(), self.labels[j].clone()]);
                }
            }
        }
        PosetJson {
            points: self.labels.clone(),
            le,
        }
    }

    pub fn from_json(json: &PosetJson) -> Result<SpectralSpace> {
        let mut relations = Vec::new();
        let index_of = |label: &str| -> Result<usize> {
            json.points
                .iter()
                .position(|p| p == label)
                .ok_or_else(|| Error::Poset(format!("unknown point label {label}")))
        };
        {
            let mut sorted = json.points.clone();
            sorted.sort();
            sorted.dedup();
            if sorted.len() != json.points.len() {
                return Err(Error::Poset("point labels must be distinct".into()));
            }
        }
        for pair in &json.le {
            relations.push((index_of(&pair[0])?, index_of(&pair[1])?));
        }
        SpectralSpace::from_order(json.points.clone(), &relations)
    }

    /// Hasse diagram in DOT form: edges are covering relations.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph poset {\n");
        for (i, label) in self.labels.iter().enumerate() {
            out.push_str(&format!("  n{i} [label=\"{label}\"];\n"));
        }
        for i in 0..self.n() {
            for j in 0..self.n() {
                if i == j || !self.le[i][j] {
                    continue;
                }
                let covering = (0..self.n())
                    .all(|k| k == i || k == j || !(self.le[i][k] && self.le[k][j]));
                if covering {
                    out.push_str(&format!("  n{i} -> n{j};\n"));
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

pub fn mask_points(mask: u64) -> Vec<usize> {
    (0..64).filter(|&i| mask & (1 << i) != 0).collect()
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PosetJson {
    pub points: Vec<String>,
    pub le: Vec<[String; 2]>,
}

#[derive(Clone, Debug)]
pub struct SeparationReport {
    pub hausdorff: bool,
    pub normal: bool,
    pub hausdorff_witness: Option<(usize, usize)>,
    pub normal_witness: Option<(Vec<usize>, Vec<usize>)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RetractionTarget {
    Max,
    Min,
}

#[derive(Clone, Debug)]
pub enum RetractionOutcome {
    Map { map: Vec<usize>, continuous: bool },
    NoUnique { point: usize, targets: Vec<usize> },
}

/// Space-level criterion verdicts grouped by characterization class.
#[derive(Clone, Debug)]
pub struct SpaceClassification {
    pub gelfand: Vec<(String, bool)>,
    pub mp: Vec<(String, bool)>,
    pub zero_dim: Vec<(String, bool)>,
}

impl SpaceClassification {
    pub fn gelfand_agrees(&self) -> Option<bool> {
        agree(&self.gelfand)
    }
    pub fn mp_agrees(&self) -> Option<bool> {
        agree(&self.mp)
    }
    pub fn zero_dim_agrees(&self) -> Option<bool> {
        agree(&self.zero_dim)
    }
}

fn agree(criteria: &[(String, bool)]) -> Option<bool> {
    let first = criteria.first()?.1;
    criteria.iter().all(|(_, v)| *v == first).then_some(first)
}
