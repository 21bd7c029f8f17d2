use std::cmp::Ordering;

/// Binary min-heap of label indices ordered by an external comparator.
///
/// Keys live in the label arena; the heap stores only indices.
#[derive(Default)]
pub(crate) struct LabelQueue {
    heap: Vec<u32>,
}

impl LabelQueue {
    pub fn len(&self) -> usize {
        self.heap.len()
    }

    pub fn push(&mut self, label: u32, less: impl Fn(u32, u32) -> bool) {
        self.heap.push(label);
        let mut i = self.heap.len() - 1;
        while i > 0 {
            let parent = (i - 1) / 2;
            if less(self.heap[i], self.heap[parent]) {
                self.heap.swap(i, parent);
                i = parent;
            } else {
                break;
            }
        }
    }

    pub fn pop(&mut self, less: impl Fn(u32, u32) -> bool) -> Option<u32> {
        let n = self.heap.len();
        if n == 0 {
            return None;
        }
        self.heap.swap(0, n - 1);
        let top = self.heap.pop();
        let n = n - 1;
        let mut i = 0;
        loop {
            let l = 2 * i + 1;
            if l >= n {
                break;
            }
            let r = l + 1;
            let child = if r < n && less(self.heap[r], self.heap[l]) { r } else { l };
            if less(self.heap[child], self.heap[i]) {
                self.heap.swap(i, child);
                i = child;
            } else {
                break;
            }
        }
        top
    }
}

pub(crate) fn is_less(ord: Ordering) -> bool {
    ord == Ordering::Less
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pops_in_key_order() {
        let keys = [5u32, 3, 9, 1, 3, 7, 0, 8];
        let less = |a: u32, b: u32| (keys[a as usize], a) < (keys[b as usize], b);
        let mut q = LabelQueue::default();
        for i in 0..keys.len() as u32 {
            q.push(i, less);
        }
        let mut out = Vec::new();
        while let Some(i) = q.pop(less) {
            out.push(i);
        }
        assert_eq!(out, vec![6, 3, 1, 4, 0, 5, 7, 2]);
        assert_eq!(q.len(), 0);
    }
}
