//! Fixed-capacity list for the one-or-two results that stationary waves produce.

/// Ordered collection of at most two items, stored inline.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UpToTwo<T: Copy> {
    items: [Option<T>; 2],
}

impl<T: Copy> Default for UpToTwo<T> {
    fn default() -> Self {
        Self { items: [None, None] }
    }
}

impl<T: Copy> UpToTwo<T> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn one(item: T) -> Self {
        Self {
            items: [Some(item), None],
        }
    }

    /// Appends an item; a third one is a logic error.
    pub fn push(&mut self, item: T) {
        let slot = self
            .items
            .iter_mut()
            .find(|s| s.is_none())
            .expect("capacity is two");
        *slot = Some(item);
    }

    pub fn iter(&self) -> impl Iterator<Item = &T> + '_ {
        self.items.iter().flatten()
    }

    pub fn len(&self) -> usize {
        self.iter().count()
    }

    pub fn is_empty(&self) -> bool {
        self.items[0].is_none()
    }

    pub fn first(&self) -> Option<T> {
        self.items[0]
    }

    pub fn get(&self, i: usize) -> Option<T> {
        self.items.get(i).copied().flatten()
    }

    pub fn map<U: Copy>(&self, mut f: impl FnMut(T) -> U) -> UpToTwo<U> {
        UpToTwo {
            items: [self.items[0].map(&mut f), self.items[1].map(&mut f)],
        }
    }
}

impl<T: Copy> IntoIterator for UpToTwo<T> {
    type Item = T;
    type IntoIter = core::iter::Flatten<core::array::IntoIter<Option<T>, 2>>;

    fn into_iter(self) -> Self::IntoIter {
        self.items.into_iter().flatten()
    }
}
