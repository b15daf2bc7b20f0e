//! Binary computation trees over a tree decomposition with one leaf per column.

use serde::Serialize;

use super::{TreeDecError, TreeDecomposition};
use crate::tableau::{Tableau, TableauError};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CtNode {
    /// Sorted bag.
    pub bag: Vec<u32>,
    /// Zero, one or two children, left first.
    pub children: Vec<usize>,
    /// Tableau column index for leaves.
    pub column: Option<usize>,
    /// Decomposition bag this node descends from (leaves: the bag they hang off).
    pub origin: usize,
    pub leftmost: usize,
    pub rightmost: usize,
    pub mid: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComputationTree {
    pub nodes: Vec<CtNode>,
    pub root: usize,
    /// Column index of the leaf with traversal index `t + 1`.
    pub leaf_order: Vec<usize>,
    /// Tableau columns, top to bottom, in original column order.
    pub columns: Vec<Vec<u32>>,
    pub n: usize,
    pub d: usize,
    /// `kappa[t][i]`: occurrences of `i` in the first `t` leaves; index `i = 0` unused.
    kappa: Vec<Vec<u32>>,
}

impl ComputationTree {
    /// Number of occurrences of `i` in columns with traversal index at most `t`.
    pub fn kappa(&self, t: usize, i: u32) -> u32 {
        self.kappa[t][i as usize]
    }

    pub fn num_leaves(&self) -> usize {
        self.leaf_order.len()
    }

    /// Column entries of the leaf with traversal index `t` (1-based).
    pub fn column_at(&self, t: usize) -> &[u32] {
        &self.columns[self.leaf_order[t - 1]]
    }

    pub fn max_bag(&self) -> usize {
        self.nodes.iter().map(|x| x.bag.len()).max().unwrap_or(0)
    }

    /// Nodes in post order (children before parents).
    pub fn post_order(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.nodes.len());
        let mut stack = vec![(self.root, false)];
        while let Some((x, expanded)) = stack.pop() {
            if expanded {
                out.push(x);
                continue;
            }
            stack.push((x, true));
            for &c in self.nodes[x].children.iter().rev() {
                stack.push((c, false));
            }
        }
        out
    }
}

/// Builds the computation tree for `t` over the decomposition `td` of its graph.
///
/// Each column hangs off the lowest-numbered bag containing its entries. Bags
/// off the Steiner subtree of the columns are pruned, the tree is rooted at the
/// smallest remaining bag, children are ordered columns first (descending
/// column index) and then bags (ascending), and wide nodes are binarized with
/// copies of their bag. With `minimize_bags`, a vertex stays in a bag only if
/// the bag lies on a path between two columns containing it.
pub fn build_computation_tree(
    t: &Tableau,
    td: &TreeDecomposition,
    minimize_bags: bool,
) -> Result<ComputationTree, TreeDecError> {
    t.validate().map_err(TableauError::Invalid)?;
    if let Some(column) = t.first_column_repeat() {
        return Err(TableauError::ColumnRepeat { column }.into());
    }
    let graph = t.graph()?.simple();
    td.validate(&graph).map_err(TreeDecError::Invalid)?;

    let columns = t.columns();
    let nb = td.bags.len();
    let nc = columns.len();
    let total = nb + nc;
    let contains = |bag: &[u32], col: &[u32]| col.iter().all(|v| bag.binary_search(v).is_ok());
    let mut attach = Vec::with_capacity(nc);
    for (c, col) in columns.iter().enumerate() {
        let b = (0..nb)
            .find(|&b| contains(&td.bags[b], col))
            .ok_or(TreeDecError::ColumnNotCovered { column: c })?;
        attach.push(b);
    }

    let mut adj = td.adjacency();
    adj.resize(total, Vec::new());
    for (c, &b) in attach.iter().enumerate() {
        adj[b].push(nb + c);
        adj[nb + c].push(b);
    }

    // prune bag leaves until only the Steiner subtree of the columns remains
    let mut alive = vec![true; total];
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let protected = if nc == 1 { Some(attach[0]) } else { None };
    let mut queue: Vec<usize> = (0..nb)
        .filter(|&b| degree[b] <= 1 && Some(b) != protected)
        .collect();
    while let Some(b) = queue.pop() {
        if !alive[b] {
            continue;
        }
        alive[b] = false;
        for &y in &adj[b] {
            if alive[y] {
                degree[y] -= 1;
                if y < nb && degree[y] <= 1 && Some(y) != protected {
                    queue.push(y);
                }
            }
        }
    }
    let root = (0..nb)
        .find(|&b| alive[b])
        .expect("at least one bag survives pruning");

    // root the pruned tree; children ordered columns (descending) then bags (ascending)
    let mut parent = vec![usize::MAX; total];
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); total];
    let mut order = vec![root];
    parent[root] = root;
    let mut i = 0;
    while i < order.len() {
        let x = order[i];
        i += 1;
        let mut kids: Vec<usize> = adj[x]
            .iter()
            .copied()
            .filter(|&y| alive[y] && parent[y] == usize::MAX)
            .collect();
        kids.sort_by_key(|&y| if y >= nb { (0, usize::MAX - y) } else { (1, y) });
        for &y in &kids {
            parent[y] = x;
            order.push(y);
        }
        children[x] = kids;
    }

    let mut bag_of: Vec<Vec<u32>> = (0..total)
        .map(|x| {
            if x < nb {
                td.bags[x].clone()
            } else {
                td.bags[attach[x - nb]].clone()
            }
        })
        .collect();
    if minimize_bags {
        minimize(&mut bag_of, &order, &children, &columns, nb, t.n());
    }

    // materialize, binarizing nodes with more than two children
    let mut nodes: Vec<CtNode> = Vec::with_capacity(2 * total);
    let mut index = vec![usize::MAX; total];
    for &x in order.iter().rev() {
        let kids: Vec<usize> = children[x].iter().map(|&y| index[y]).collect();
        let origin = if x < nb { x } else { attach[x - nb] };
        let column = (x >= nb).then(|| x - nb);
        index[x] = binarize(&mut nodes, &bag_of[x], kids, column, origin);
    }
    let root = index[root];

    let mut ct = ComputationTree {
        nodes,
        root,
        leaf_order: Vec::with_capacity(nc),
        columns,
        n: t.n(),
        d: t.d(),
        kappa: Vec::new(),
    };
    for x in ct.post_order() {
        if ct.nodes[x].children.len() == 1 {
            let child = ct.nodes[x].children[0];
            ct.nodes[x].bag = ct.nodes[child].bag.clone();
        }
    }
    number_leaves(&mut ct);
    let mut kappa = vec![vec![0u32; ct.n + 1]];
    for t in 1..=nc {
        let mut row = kappa[t - 1].clone();
        for &v in ct.column_at(t) {
            row[v as usize] += 1;
        }
        kappa.push(row);
    }
    ct.kappa = kappa;
    Ok(ct)
}

fn binarize(
    nodes: &mut Vec<CtNode>,
    bag: &[u32],
    kids: Vec<usize>,
    column: Option<usize>,
    origin: usize,
) -> usize {
    let kids = if kids.len() > 2 {
        let rest = binarize(nodes, bag, kids[1..].to_vec(), None, origin);
        vec![kids[0], rest]
    } else {
        kids
    };
    nodes.push(CtNode {
        bag: bag.to_vec(),
        children: kids,
        column,
        origin,
        leftmost: 0,
        rightmost: 0,
        mid: 0,
    });
    nodes.len() - 1
}

/// Keeps vertex `i` in a bag only when the node separates two columns containing `i`.
fn minimize(
    bag_of: &mut [Vec<u32>],
    order: &[usize],
    children: &[Vec<usize>],
    columns: &[Vec<u32>],
    nb: usize,
    n: usize,
) {
    let total = bag_of.len();
    for i in 1..=n as u32 {
        let member: Vec<bool> = (0..total)
            .map(|x| x >= nb && columns[x - nb].contains(&i))
            .collect();
        let all = member.iter().filter(|&&m| m).count();
        let mut below = vec![0usize; total];
        for &x in order.iter().rev() {
            below[x] =
                usize::from(member[x]) + children[x].iter().map(|&y| below[y]).sum::<usize>();
        }
        for &x in order {
            let keep = if x >= nb {
                member[x]
            } else {
                let branches = children[x].iter().filter(|&&y| below[y] > 0).count()
                    + usize::from(all > below[x]);
                branches >= 2
            };
            if !keep {
                bag_of[x].retain(|&v| v != i);
            }
        }
    }
}

fn number_leaves(ct: &mut ComputationTree) {
    for x in ct.post_order() {
        let node = &ct.nodes[x];
        match node.children.as_slice() {
            [] => {
                ct.leaf_order.push(node.column.expect("leaves are columns"));
                let t = ct.leaf_order.len();
                let node = &mut ct.nodes[x];
                node.leftmost = t;
                node.rightmost = t;
                node.mid = t;
            }
            &[c] => {
                let (l, r, m) = (ct.nodes[c].leftmost, ct.nodes[c].rightmost, ct.nodes[c].mid);
                let node = &mut ct.nodes[x];
                node.leftmost = l;
                node.rightmost = r;
                node.mid = m;
            }
            &[a, b] => {
                let (l, m, r) = (
                    ct.nodes[a].leftmost,
                    ct.nodes[a].rightmost,
                    ct.nodes[b].rightmost,
                );
                let node = &mut ct.nodes[x];
                node.leftmost = l;
                node.rightmost = r;
                node.mid = m;
            }
            _ => unreachable!("computation trees are binary"),
        }
    }
}
