//! The bijection between permutations with set-increasing
//! left-to-right-maximum blocks and cycle-labeled ordered trees.
//!
//! Forward direction. Decompose the word as m_1 L_1 / ... / m_r L_r with
//! segment lengths a_i and gaps b_i = m_i - m_{i-1}. Hang a_r edges off the
//! root labeled with the entries of m_r L_r, then repeatedly attach the
//! next segment (a_{i-1} edges labeled m_{i-1} L_{i-1}) below a leaf chosen
//! by the gap value: a cursor tracks the walkaround position of the first
//! leaf created by the previous attachment, and gap b lands at leaf
//! position cursor + b - 1. After the last attachment, b_1 must equal the
//! number of leaves from the cursor onward — an internal consistency check.
//! Finally each internal vertex's edge labels are turned into a standard
//! cycle: erase the leftmost label (a left-to-right maximum), standardize
//! the rest, and write the outdegree on the leftmost edge.
//!
//! Inverse direction. Internal vertices are created in walkaround
//! (preorder) order, so their outdegrees read in preorder give
//! a_r, ..., a_1; replaying the attachment simulation against the tree's
//! shape recovers the gaps b_i, hence the maxima m_i; the remaining values
//! are dealt to the blocks in increasing runs and each block's word is
//! rebuilt from its cycle by inverse standardization.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{lrmax_decompose, satisfies_condition_i, standardize_word, Permutation};
use crate::tree::OrderedTree;

/// Ordered tree whose internal vertices label their child edges, left to
/// right, with the entries of a standard cycle (a permutation of [k] whose
/// first entry is k, k = outdegree). Leaves carry empty label lists.
///
/// Serializes as `{"labels": [...], "children": [...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleLabeledTree {
    pub labels: Vec<u32>,
    pub children: Vec<CycleLabeledTree>,
}

impl CycleLabeledTree {
    pub fn leaf() -> Self {
        CycleLabeledTree {
            labels: Vec::new(),
            children: Vec::new(),
        }
    }

    pub fn edge_count(&self) -> usize {
        self.children.iter().map(|c| 1 + c.edge_count()).sum()
    }

    /// The underlying unlabeled tree.
    pub fn shape(&self) -> OrderedTree {
        OrderedTree {
            children: self.children.iter().map(|c| c.shape()).collect(),
        }
    }

    /// Cycles of the internal vertices in preorder.
    pub fn preorder_cycles(&self) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        fn walk(t: &CycleLabeledTree, out: &mut Vec<Vec<u32>>) {
            if !t.children.is_empty() {
                out.push(t.labels.clone());
            }
            for c in &t.children {
                walk(c, out);
            }
        }
        walk(self, &mut out);
        out
    }
}

/// Structural diagnostics; an empty list means the tree is valid.
/// Offending vertices are named by their preorder position (0 = root).
pub fn validate_cycle_tree(t: &CycleLabeledTree) -> Vec<String> {
    let mut problems = Vec::new();
    let mut position = 0usize;
    fn walk(t: &CycleLabeledTree, position: &mut usize, problems: &mut Vec<String>) {
        let here = *position;
        *position += 1;
        let k = t.children.len();
        if t.labels.len() != k {
            problems.push(format!(
                "vertex {here}: {} labels for {k} child edges",
                t.labels.len()
            ));
        } else if k > 0 {
            let mut seen = vec![false; k];
            let mut in_range = true;
            for &l in &t.labels {
                if l == 0 || l as usize > k {
                    problems.push(format!(
                        "vertex {here}: label {l} outside 1..={k}"
                    ));
                    in_range = false;
                    break;
                }
                if seen[l as usize - 1] {
                    problems.push(format!("vertex {here}: repeated label {l}"));
                    in_range = false;
                    break;
                }
                seen[l as usize - 1] = true;
            }
            if in_range && t.labels[0] as usize != k {
                problems.push(format!(
                    "vertex {here}: leftmost label {} is not the outdegree {k}",
                    t.labels[0]
                ));
            }
        }
        for c in &t.children {
            walk(c, position, problems);
        }
    }
    walk(t, &mut position, &mut problems);
    problems
}

/// True when every internal vertex carries a standard cycle.
pub fn is_valid_cycle_tree(t: &CycleLabeledTree) -> bool {
    validate_cycle_tree(t).is_empty()
}

/// Every valid cycle-labeled tree with n edges: each ordered tree shape
/// combined with every choice of standard cycles on its internal vertices.
/// Counts grow like the block-increasing permutation numbers, so n is
/// capped at 8.
pub fn enumerate_cycle_trees(n: usize) -> Result<Vec<CycleLabeledTree>> {
    const MAX: usize = 8;
    if n > MAX {
        return Err(Error::LimitExceeded {
            what: "cycle-labeled tree enumeration",
            limit: MAX,
            requested: n,
        });
    }
    let mut out = Vec::new();
    for shape in crate::tree::enumerate_trees(n)? {
        out.extend(labelings(&shape));
    }
    Ok(out)
}

fn labelings(shape: &OrderedTree) -> Vec<CycleLabeledTree> {
    let k = shape.children.len();
    if k == 0 {
        return vec![CycleLabeledTree::leaf()];
    }
    // all standard cycles on [k]: k followed by any arrangement of 1..k-1
    let mut cycles = Vec::new();
    crate::perm::for_each_standard_permutation(k - 1, |tail| {
        let mut cycle = vec![k as u32];
        cycle.extend_from_slice(tail);
        cycles.push(cycle);
    });

    let child_options: Vec<Vec<CycleLabeledTree>> =
        shape.children.iter().map(labelings).collect();
    let mut combos: Vec<Vec<CycleLabeledTree>> = vec![Vec::new()];
    for options in &child_options {
        let mut next = Vec::with_capacity(combos.len() * options.len());
        for combo in &combos {
            for opt in options {
                let mut extended = combo.clone();
                extended.push(opt.clone());
                next.push(extended);
            }
        }
        combos = next;
    }

    let mut out = Vec::with_capacity(cycles.len() * combos.len());
    for cycle in &cycles {
        for combo in &combos {
            out.push(CycleLabeledTree {
                labels: cycle.clone(),
                children: combo.clone(),
            });
        }
    }
    out
}

// Growing tree during the forward construction: children/edge labels per
// vertex, addressed by arena index.
struct ArenaNode {
    children: Vec<usize>,
    edge_labels: Vec<u32>,
}

/// Map a standard permutation with set-increasing blocks to its
/// cycle-labeled tree. The empty permutation maps to the one-vertex tree.
pub fn perm_to_tree(p: &Permutation) -> Result<CycleLabeledTree> {
    if p.is_empty() {
        return Ok(CycleLabeledTree::leaf());
    }
    if !p.is_standard() {
        return Err(Error::InvalidPermutation(format!(
            "{p} is not a permutation of 1..{}",
            p.len()
        )));
    }
    if !satisfies_condition_i(p) {
        return Err(Error::ConditionIViolation(format!(
            "an earlier block of {p} reaches above a later one"
        )));
    }

    let d = lrmax_decompose(p)?;
    let r = d.segments.len();
    let gaps = d.max_gaps();
    let segment_word = |i: usize| -> Vec<u32> {
        let s = &d.segments[i];
        let mut w = vec![s.max];
        w.extend_from_slice(&s.tail);
        w
    };

    let mut arena: Vec<ArenaNode> = vec![ArenaNode {
        children: Vec::new(),
        edge_labels: Vec::new(),
    }];
    let attach = |arena: &mut Vec<ArenaNode>, target: usize, word: &[u32]| -> Vec<usize> {
        let mut ids = Vec::with_capacity(word.len());
        for &label in word {
            let id = arena.len();
            arena.push(ArenaNode {
                children: Vec::new(),
                edge_labels: Vec::new(),
            });
            arena[target].children.push(id);
            arena[target].edge_labels.push(label);
            ids.push(id);
        }
        ids
    };

    // Leaves of the partial tree in walkaround order; cursor is the 1-based
    // position of the first leaf made by the latest attachment.
    let mut leaves = attach(&mut arena, 0, &segment_word(r - 1));
    let mut cursor = 1usize;
    for seg in (0..r - 1).rev() {
        let gap = gaps[seg + 1] as usize;
        let pos = cursor + gap - 1;
        assert!(
            pos >= 1 && pos <= leaves.len(),
            "attachment position {pos} outside 1..={}",
            leaves.len()
        );
        let target = leaves[pos - 1];
        let new_ids = attach(&mut arena, target, &segment_word(seg));
        leaves.splice(pos - 1..pos, new_ids);
        cursor = pos;
    }
    assert_eq!(
        gaps[0] as usize,
        leaves.len() - cursor + 1,
        "terminal gap consistency"
    );

    Ok(relabel_to_cycles(&arena, 0))
}

// Erase each internal vertex's leftmost edge label, standardize the rest,
// and write the outdegree on the leftmost edge.
fn relabel_to_cycles(arena: &[ArenaNode], id: usize) -> CycleLabeledTree {
    let node = &arena[id];
    if node.children.is_empty() {
        return CycleLabeledTree::leaf();
    }
    let k = node.children.len() as u32;
    let mut labels = vec![k];
    labels.extend(standardize_word(&node.edge_labels[1..]));
    CycleLabeledTree {
        labels,
        children: node
            .children
            .iter()
            .map(|&c| relabel_to_cycles(arena, c))
            .collect(),
    }
}

// Flattened view with preorder ids.
struct FlatNode<'a> {
    children: Vec<usize>,
    labels: &'a [u32],
}

fn flatten(t: &CycleLabeledTree) -> Vec<FlatNode<'_>> {
    let mut nodes = Vec::new();
    fn walk<'a>(t: &'a CycleLabeledTree, nodes: &mut Vec<FlatNode<'a>>) -> usize {
        let id = nodes.len();
        nodes.push(FlatNode {
            children: Vec::new(),
            labels: &t.labels,
        });
        for c in &t.children {
            let cid = walk(c, nodes);
            nodes[id].children.push(cid);
        }
        id
    }
    walk(t, &mut nodes);
    nodes
}

/// Exact inverse of [`perm_to_tree`].
pub fn tree_to_perm(t: &CycleLabeledTree) -> Result<Permutation> {
    let problems = validate_cycle_tree(t);
    if !problems.is_empty() {
        return Err(Error::InvalidTree(problems.join("; ")));
    }
    let n = t.edge_count();
    if n == 0 {
        return Ok(Permutation::new_unchecked(Vec::new()));
    }

    let nodes = flatten(t);
    let internals: Vec<usize> = (0..nodes.len())
        .filter(|&id| !nodes[id].children.is_empty())
        .collect();
    let r = internals.len();
    debug_assert_eq!(internals[0], 0, "root of a nonempty tree is internal");

    // Outdegrees in preorder are a_r, ..., a_1.
    let mut lengths = vec![0usize; r];
    for (j, &id) in internals.iter().enumerate() {
        lengths[r - 1 - j] = nodes[id].children.len();
    }

    // Replay the attachment simulation against the shape to read the gaps.
    let mut gaps = vec![0usize; r];
    let mut leaves: Vec<usize> = nodes[0].children.clone();
    let mut cursor = 1usize;
    for j in 1..r {
        let v = internals[j];
        let pos = leaves
            .iter()
            .position(|&id| id == v)
            .expect("next internal vertex is a current leaf")
            + 1;
        debug_assert!(pos >= cursor, "walkaround order of internal vertices");
        gaps[r - j] = pos - cursor + 1;
        let children = nodes[v].children.clone();
        leaves.splice(pos - 1..pos, children);
        cursor = pos;
    }
    gaps[0] = leaves.len() - cursor + 1;

    let maxima: Vec<usize> = gaps
        .iter()
        .scan(0usize, |acc, &g| {
            *acc += g;
            Some(*acc)
        })
        .collect();
    debug_assert_eq!(*maxima.last().unwrap(), n);

    // Non-maximum values, smallest first, dealt to the blocks in runs of
    // a_i - 1: forced by the set-increasing condition.
    let is_max: std::collections::HashSet<usize> = maxima.iter().copied().collect();
    let mut pool: Vec<u32> = (1..=n as u32).filter(|v| !is_max.contains(&(*v as usize))).collect();
    pool.reverse(); // pop() takes the smallest remaining

    let mut word = Vec::with_capacity(n);
    for i in 0..r {
        word.push(maxima[i] as u32);
        let k = lengths[i];
        let mut support = Vec::with_capacity(k - 1);
        for _ in 1..k {
            support.push(pool.pop().expect("enough non-maximum values"));
        }
        // The cycle tail is the standardized block; invert it on the support.
        let cycle = nodes[internals[r - 1 - i]].labels;
        debug_assert_eq!(cycle[0] as usize, k);
        for &c in &cycle[1..] {
            word.push(support[c as usize - 1]);
        }
    }
    debug_assert!(pool.is_empty());
    Ok(Permutation::new_unchecked(word))
}
