use super::cbt::cbt;
use super::model::MinorModel;
use crate::decomp::PathDecomposition;
use crate::error::{Error, Result};
use crate::graph::{Graph, RootedForest};

/// Recursion values `R(v)` of a tree rooted at a chosen vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedPwMap {
    pub tree: RootedForest,
    pub value: Vec<usize>,
}

impl RootedPwMap {
    pub fn root(&self) -> usize {
        self.tree.roots()[0]
    }

    pub fn at(&self, v: usize) -> usize {
        self.value[v]
    }

    /// Children of `v` by decreasing value, ties by increasing id.
    pub fn ordered_children(&self, v: usize) -> Vec<usize> {
        let mut c = self.tree.children(v).to_vec();
        c.sort_by_key(|&w| (std::cmp::Reverse(self.value[w]), w));
        c
    }
}

/// Roots a tree at `root` by breadth-first search.
pub fn root_tree(t: &Graph, root: usize) -> Result<RootedForest> {
    if root >= t.n() {
        return Err(Error::InvalidInput(format!("root {root} out of range")));
    }
    if !t.is_tree() {
        return Err(Error::Precondition("expected a tree (connected and acyclic)".into()));
    }
    let mut parent = vec![None; t.n()];
    let mut seen = vec![false; t.n()];
    seen[root] = true;
    let mut queue = std::collections::VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for &w in t.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = Some(v);
                queue.push_back(w);
            }
        }
    }
    RootedForest::from_parents(parent)
}

pub fn rooted_pw_map(t: &Graph, root: usize) -> Result<RootedPwMap> {
    let tree = root_tree(t, root)?;
    let mut value = vec![0; t.n()];
    for &v in tree.preorder().iter().rev() {
        let mut vals: Vec<usize> = tree.children(v).iter().map(|&c| value[c]).collect();
        if vals.is_empty() {
            continue;
        }
        vals.sort_unstable_by(|a, b| b.cmp(a));
        let r2 = vals.get(1).map_or(0, |&r| r + 1);
        value[v] = vals[0].max(r2).max(1);
    }
    Ok(RootedPwMap { tree, value })
}

/// Path decomposition of a tree of width at most `R(root)` whose last bag
/// contains `root`.
pub fn rooted_decomposition(t: &Graph, root: usize) -> Result<PathDecomposition> {
    let map = rooted_pw_map(t, root)?;
    Ok(decomposition_from_map(&map))
}

pub(crate) fn decomposition_from_map(map: &RootedPwMap) -> PathDecomposition {
    enum Task {
        Emit(usize, Vec<usize>),
        Bag(Vec<usize>),
    }
    let mut bags = Vec::new();
    let mut stack = vec![Task::Emit(map.root(), Vec::new())];
    while let Some(task) = stack.pop() {
        match task {
            Task::Bag(b) => bags.push(b),
            Task::Emit(v, carry) => {
                let children = map.ordered_children(v);
                if children.is_empty() {
                    let mut bag = carry;
                    bag.push(v);
                    bags.push(bag);
                    continue;
                }
                let mut with_v = carry.clone();
                with_v.push(v);
                for &c in children[1..].iter().rev() {
                    stack.push(Task::Emit(c, with_v.clone()));
                }
                let mut join = carry.clone();
                join.extend([children[0], v]);
                stack.push(Task::Bag(join));
                stack.push(Task::Emit(children[0], carry));
            }
        }
    }
    // A leaf bag directly followed by its join bag is redundant.
    let mut kept: Vec<Vec<usize>> = Vec::with_capacity(bags.len());
    for (i, bag) in bags.iter().enumerate() {
        let covered = bags.get(i + 1).is_some_and(|next| bag.iter().all(|v| next.contains(v)));
        if !covered {
            kept.push(bag.clone());
        }
    }
    PathDecomposition::new(kept)
}

/// Model of `cbt(q)` in the tree `t` whose root branch set contains `root`.
pub fn extract_cbt_minor(t: &Graph, root: usize, q: usize) -> Result<MinorModel> {
    let map = rooted_pw_map(t, root)?;
    extract_from_map(&map, q)
}

pub(crate) fn extract_from_map(map: &RootedPwMap, q: usize) -> Result<MinorModel> {
    let root = map.root();
    if map.at(root) < q + 1 {
        return Err(Error::Precondition(format!(
            "R({root}) = {} is too small for a binary tree of height {q}",
            map.at(root)
        )));
    }
    let pattern = cbt(q).into_graph();
    let mut sets = vec![Vec::new(); pattern.n()];
    // (host vertex, remaining height, pattern node)
    let mut stack = vec![(root, q, 0usize)];
    while let Some((mut v, q, p)) = stack.pop() {
        // Descend while a single child already carries enough value.
        loop {
            sets[p].push(v);
            if q == 0 {
                break;
            }
            let children = map.ordered_children(v);
            if map.at(children[0]) >= q + 1 {
                v = children[0];
                continue;
            }
            debug_assert!(children.len() >= 2 && map.at(children[1]) >= q);
            stack.push((children[0], q - 1, 2 * p + 1));
            stack.push((children[1], q - 1, 2 * p + 2));
            break;
        }
    }
    let mut model = MinorModel::new(pattern, sets);
    model.root_anchor = Some((0, root));
    Ok(model)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::validate;
    use crate::oracles::{exact_pathwidth, OracleBudget};
    use rand::{Rng, SeedableRng};

    fn random_tree(rng: &mut impl Rng, n: usize) -> Graph {
        let mut g = Graph::new(n);
        for v in 1..n {
            g.insert(rng.gen_range(0..v), v);
        }
        g
    }

    #[test]
    fn recursion_examples() {
        assert_eq!(rooted_pw_map(&Graph::new(1), 0).unwrap().at(0), 0);
        let e = Graph::path(2);
        assert_eq!(rooted_pw_map(&e, 0).unwrap().at(0), 1);
        assert_eq!(rooted_pw_map(&e, 1).unwrap().at(1), 1);
        assert_eq!(rooted_pw_map(cbt(2).graph(), 0).unwrap().at(0), 2);
        assert_eq!(rooted_pw_map(&Graph::path(5), 0).unwrap().at(0), 1);
        assert_eq!(rooted_pw_map(&Graph::star(3), 0).unwrap().at(0), 1);
        assert!(matches!(rooted_pw_map(&Graph::cycle(3), 0), Err(Error::Precondition(_))));
        let forest = Graph::path(2).disjoint_union(&Graph::new(1));
        assert!(rooted_pw_map(&forest, 0).is_err());
    }

    #[test]
    fn decomposition_examples() {
        let d = rooted_decomposition(&Graph::path(2), 1).unwrap();
        assert_eq!(d.bags(), &[vec![0, 1]]);
        let d = rooted_decomposition(&Graph::star(3), 0).unwrap();
        assert_eq!(d.width().unwrap(), 1);
        assert!(d.bags().last().unwrap().contains(&0));
        let t = cbt(2);
        let d = rooted_decomposition(t.graph(), 0).unwrap();
        assert_eq!(d.width().unwrap(), 2);
        assert!(validate(t.graph(), &d).unwrap().valid);
    }

    #[test]
    fn random_trees_decompose_within_value() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..300 {
            let n = rng.gen_range(1..40);
            let t = random_tree(&mut rng, n);
            let root = rng.gen_range(0..n);
            let map = rooted_pw_map(&t, root).unwrap();
            let d = decomposition_from_map(&map);
            assert!(validate(&t, &d).unwrap().valid);
            assert!(d.width().unwrap() <= map.at(root));
            assert!(d.bags().last().unwrap().contains(&root));
        }
    }

    #[test]
    fn value_bounds_exact_pathwidth() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(6);
        for _ in 0..60 {
            let n = rng.gen_range(1..=14);
            let t = random_tree(&mut rng, n);
            let root = rng.gen_range(0..n);
            let pw = exact_pathwidth(&t, &OracleBudget::PATHWIDTH).unwrap().width;
            assert!(pw <= rooted_pw_map(&t, root).unwrap().at(root));
        }
    }

    #[test]
    fn extraction_examples() {
        let t = cbt(2);
        let m = extract_cbt_minor(t.graph(), 0, 1).unwrap();
        assert!(m.is_valid(t.graph()), "{:?}", m.violations(t.graph()));
        assert_eq!(m.pattern.n(), 3);
        let m0 = extract_cbt_minor(&Graph::path(3), 0, 0).unwrap();
        assert_eq!(m0.branch_sets, vec![vec![0]]);
        assert!(matches!(
            extract_cbt_minor(&Graph::path(5), 0, 1),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn extraction_on_random_trees() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let n = rng.gen_range(2..80);
            let t = random_tree(&mut rng, n);
            let root = rng.gen_range(0..n);
            let map = rooted_pw_map(&t, root).unwrap();
            for q in 0..map.at(root) {
                let m = extract_from_map(&map, q).unwrap();
                assert!(m.is_valid(&t), "{:?}", m.violations(&t));
                assert_eq!(m.pattern, cbt(q).into_graph());
            }
        }
    }
}
