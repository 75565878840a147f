//! In-repo example systems used by tests, the verification suites and the
//! documentation. Each is shipped as a JSON file in `fixtures/`.

use crate::model::{validate_system, TileSystem};

/// Names of all shipped fixture systems.
pub const ALL: [&str; 12] = [
    "ray", "line3", "conflict", "span", "zigzag", "uturn", "fork", "seedblock", "eastseed",
    "notmin", "ring", "block3",
];

/// Raw JSON for a fixture.
pub fn source(name: &str) -> &'static str {
    match name {
        "ray" => include_str!("../fixtures/ray.json"),
        "line3" => include_str!("../fixtures/line3.json"),
        "conflict" => include_str!("../fixtures/conflict.json"),
        "span" => include_str!("../fixtures/span.json"),
        "zigzag" => include_str!("../fixtures/zigzag.json"),
        "uturn" => include_str!("../fixtures/uturn.json"),
        "fork" => include_str!("../fixtures/fork.json"),
        "seedblock" => include_str!("../fixtures/seedblock.json"),
        "eastseed" => include_str!("../fixtures/eastseed.json"),
        "notmin" => include_str!("../fixtures/notmin.json"),
        "ring" => include_str!("../fixtures/ring.json"),
        "block3" => include_str!("../fixtures/block3.json"),
        other => panic!("unknown fixture `{other}`"),
    }
}

/// Parse a fixture system. Panics on unknown names; fixtures are validated
/// by the test suite.
pub fn load(name: &str) -> TileSystem {
    validate_system(source(name)).unwrap_or_else(|e| panic!("fixture `{name}` invalid: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{classify, Classification};

    #[test]
    fn all_fixtures_parse() {
        for name in ALL {
            let _ = load(name);
        }
    }

    #[test]
    fn fixture_classifications() {
        for name in ALL {
            let sys = load(name);
            let got = classify(&sys);
            match name {
                "ray" => assert!(matches!(got, Classification::Infinite { .. }), "{name}"),
                "conflict" => {
                    assert!(matches!(got, Classification::NonDirected { .. }), "{name}")
                }
                _ => assert!(
                    matches!(got, Classification::Finite { .. }),
                    "{name} should be finite+directed, got {got:?}"
                ),
            }
        }
    }

    #[test]
    fn uturn_terminal_size() {
        // Seed (1) + trunk (33) + the blocked cascade stubs east of the
        // second ring (copies of h1 and x3) = 36 tiles.
        let sys = load("uturn");
        match classify(&sys) {
            Classification::Finite { tiles, .. } => assert_eq!(tiles, 36),
            other => panic!("uturn not finite: {other:?}"),
        }
    }
}
