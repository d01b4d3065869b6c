//! 24-bit sets of ray and basis ids.

use std::fmt;

use crate::geometry::{BasisId, RayId};

const FULL: u32 = (1 << 24) - 1;

macro_rules! id_set {
    ($name:ident, $id:ident, $label:literal) => {
        #[doc = concat!("Set of ", $label, " ids, bit `i` standing for id `i + 1`.")]
        #[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub struct $name(u32);

        impl $name {
            pub const EMPTY: Self = Self(0);
            pub const FULL: Self = Self(FULL);

            pub fn from_bits(bits: u32) -> Self {
                Self(bits & FULL)
            }

            pub fn bits(self) -> u32 {
                self.0
            }

            pub fn singleton(id: $id) -> Self {
                Self(1 << id.index())
            }

            pub fn len(self) -> usize {
                self.0.count_ones() as usize
            }

            pub fn is_empty(self) -> bool {
                self.0 == 0
            }

            pub fn contains(self, id: $id) -> bool {
                self.0 >> id.index() & 1 == 1
            }

            pub fn insert(&mut self, id: $id) {
                self.0 |= 1 << id.index();
            }

            pub fn remove(&mut self, id: $id) {
                self.0 &= !(1 << id.index());
            }

            pub fn without(self, id: $id) -> Self {
                Self(self.0 & !(1 << id.index()))
            }

            pub fn union(self, other: Self) -> Self {
                Self(self.0 | other.0)
            }

            pub fn intersection(self, other: Self) -> Self {
                Self(self.0 & other.0)
            }

            pub fn difference(self, other: Self) -> Self {
                Self(self.0 & !other.0)
            }

            pub fn complement(self) -> Self {
                Self(!self.0 & FULL)
            }

            pub fn is_subset(self, other: Self) -> bool {
                self.0 & !other.0 == 0
            }

            pub fn is_disjoint(self, other: Self) -> bool {
                self.0 & other.0 == 0
            }

            /// Ids in ascending order.
            pub fn iter(self) -> impl Iterator<Item = $id> {
                let mut bits = self.0;
                std::iter::from_fn(move || {
                    if bits == 0 {
                        return None;
                    }
                    let i = bits.trailing_zeros();
                    bits &= bits - 1;
                    Some($id::from_index(i as usize))
                })
            }

            pub fn ids(self) -> Vec<u8> {
                self.iter().map(|id| id.get()).collect()
            }

            /// Orders sets by their ascending id lists.
            pub fn cmp_lex(self, other: Self) -> std::cmp::Ordering {
                self.iter().cmp(other.iter())
            }
        }

        impl FromIterator<$id> for $name {
            fn from_iter<I: IntoIterator<Item = $id>>(iter: I) -> Self {
                let mut set = Self::EMPTY;
                for id in iter {
                    set.insert(id);
                }
                set
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.debug_set()
                    .entries(self.iter().map(|id| id.get()))
                    .finish()
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let mut first = true;
                f.write_str("{")?;
                for id in self.iter() {
                    if !first {
                        f.write_str(",")?;
                    }
                    first = false;
                    write!(f, "{}", id.get())?;
                }
                f.write_str("}")
            }
        }
    };
}

id_set!(RaySet, RayId, "ray");
id_set!(BasisSet, BasisId, "basis");

impl RaySet {
    pub fn from_ids(ids: &[u8]) -> crate::Result<Self> {
        ids.iter().map(|&i| RayId::new(i)).collect()
    }
}

impl BasisSet {
    pub fn from_ids(ids: &[u8]) -> crate::Result<Self> {
        ids.iter().map(|&i| BasisId::new(i)).collect()
    }
}
