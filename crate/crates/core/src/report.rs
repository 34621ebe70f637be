//! Serialization helpers shared by reports.

use num_bigint::BigUint;
use serde::ser::{SerializeSeq, Serializer};

use crate::set::GroupSet;

pub(crate) fn biguint_as_string<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

pub(crate) fn set_as_list<S: Serializer>(v: &GroupSet, s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        seq.serialize_element(&x)?;
    }
    seq.end()
}

pub(crate) fn opt_set_as_list<S: Serializer>(v: &Option<GroupSet>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(set) => set_as_list(set, s),
        None => s.serialize_none(),
    }
}
