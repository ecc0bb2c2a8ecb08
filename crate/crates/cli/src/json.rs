//! JSON encodings shared by every subcommand.
//!
//! Partitions are arrays of parts. Integers are JSON numbers when they fit in
//! an `i64` and decimal strings otherwise; rationals are `{num, den}` with
//! the same rule for each field.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use partperm::Partition;
use serde_json::{json, Value};

pub fn partition(p: &Partition) -> Value {
    json!(p.parts())
}

pub fn integer(n: &BigInt) -> Value {
    n.to_i64()
        .map_or_else(|| Value::String(n.to_string()), Value::from)
}

pub fn rational(q: &BigRational) -> Value {
    json!({ "num": integer(q.numer()), "den": integer(q.denom()) })
}

/// `[{partition, coefficient}]` in the order given.
pub fn terms<'a>(items: impl IntoIterator<Item = (&'a Partition, &'a BigRational)>) -> Value {
    Value::Array(
        items
            .into_iter()
            .map(|(p, c)| json!({ "partition": partition(p), "coefficient": rational(c) }))
            .collect(),
    )
}

pub fn document(command: &str, inputs: Value, results: Value, violations: Option<Value>) -> Value {
    let mut doc = json!({ "command": command, "inputs": inputs, "results": results });
    if let Some(v) = violations {
        doc["violations"] = v;
    }
    doc
}
