use alloc::vec::Vec;

use crate::{Error, Result};

const NIL: u32 = u32::MAX;

struct Node<T> {
    value: T,
    priority: u64,
    left: u32,
    right: u32,
    size: u32,
}

/// A sequence supporting insertion at a position counted from the end,
/// in expected `O(log m)` per insertion (implicit treap).
pub struct IndexableList<T> {
    nodes: Vec<Node<T>>,
    root: u32,
    state: u64,
}

impl<T: Clone> IndexableList<T> {
    pub fn new(initial: impl IntoIterator<Item = T>) -> Self {
        let mut list = IndexableList { nodes: Vec::new(), root: NIL, state: 0x9e37_79b9_7f4a_7c15 };
        for v in initial {
            list.insert_from_end(v, 1).expect("appending is always in range");
        }
        list
    }

    pub fn len(&self) -> usize {
        self.size(self.root) as usize
    }

    pub fn is_empty(&self) -> bool {
        self.root == NIL
    }

    /// Inserts `x` so that exactly `k - 1` existing elements follow it.
    /// `k = 1` appends; `k = len + 1` prepends.
    pub fn insert_from_end(&mut self, x: T, k: usize) -> Result<()> {
        let len = self.len();
        if k == 0 || k > len + 1 {
            return Err(Error::PositionOutOfRange { k, max: len + 1 });
        }
        let priority = self.next_priority();
        let id = self.nodes.len() as u32;
        self.nodes.push(Node { value: x, priority, left: NIL, right: NIL, size: 1 });
        let (a, b) = self.split(self.root, len + 1 - k);
        let left = self.merge(a, id);
        self.root = self.merge(left, b);
        Ok(())
    }

    pub fn to_vec(&self) -> Vec<T> {
        let mut out = Vec::with_capacity(self.len());
        let mut stack = Vec::new();
        let mut cur = self.root;
        while cur != NIL || !stack.is_empty() {
            while cur != NIL {
                stack.push(cur);
                cur = self.nodes[cur as usize].left;
            }
            let top = stack.pop().expect("stack is non-empty here");
            out.push(self.nodes[top as usize].value.clone());
            cur = self.nodes[top as usize].right;
        }
        out
    }

    fn next_priority(&mut self) -> u64 {
        // splitmix64
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    fn size(&self, t: u32) -> u32 {
        if t == NIL {
            0
        } else {
            self.nodes[t as usize].size
        }
    }

    fn update(&mut self, t: u32) {
        let n = &self.nodes[t as usize];
        let size = 1 + self.size(n.left) + self.size(n.right);
        self.nodes[t as usize].size = size;
    }

    /// Splits into the first `count` elements and the rest.
    fn split(&mut self, t: u32, count: usize) -> (u32, u32) {
        if t == NIL {
            return (NIL, NIL);
        }
        let left_size = self.size(self.nodes[t as usize].left) as usize;
        if count <= left_size {
            let (a, b) = self.split(self.nodes[t as usize].left, count);
            self.nodes[t as usize].left = b;
            self.update(t);
            (a, t)
        } else {
            let (a, b) = self.split(self.nodes[t as usize].right, count - left_size - 1);
            self.nodes[t as usize].right = a;
            self.update(t);
            (t, b)
        }
    }

    fn merge(&mut self, a: u32, b: u32) -> u32 {
        if a == NIL {
            return b;
        }
        if b == NIL {
            return a;
        }
        if self.nodes[a as usize].priority > self.nodes[b as usize].priority {
            let r = self.merge(self.nodes[a as usize].right, b);
            self.nodes[a as usize].right = r;
            self.update(a);
            a
        } else {
            let l = self.merge(a, self.nodes[b as usize].left);
            self.nodes[b as usize].left = l;
            self.update(b);
            b
        }
    }
}
