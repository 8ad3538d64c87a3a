//! Serialize integers and rationals as decimal strings so large values
//! survive JSON readers that parse numbers as doubles.

use serde::ser::SerializeStruct;
use serde::Serializer;

use crate::algebra::Rational;
use crate::invariants::ClassTriple;

pub mod int {
    use super::*;

    pub fn serialize<S: Serializer, T: ToString>(v: &T, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }
}

pub mod opt_int {
    use super::*;

    pub fn serialize<S: Serializer>(v: &Option<i64>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(v) => s.serialize_str(&v.to_string()),
            None => s.serialize_none(),
        }
    }
}

pub mod rational {
    use super::*;

    pub fn serialize<S: Serializer>(v: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }
}

pub mod triple {
    use super::*;

    pub fn serialize<S: Serializer>(t: &ClassTriple, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("ClassTriple", 3)?;
        st.serialize_field("d", &t.d.to_string())?;
        st.serialize_field("g", &t.g.to_string())?;
        st.serialize_field("c", &t.c.to_string())?;
        st.end()
    }
}
