use std::fs;
use std::path::Path;

#[test]
fn header_declares_every_export() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR"));
    let src = fs::read_to_string(dir.join("src/lib.rs")).unwrap();
    let header = fs::read_to_string(dir.join("include/mlq.h")).unwrap();
    let exports: Vec<&str> = src
        .lines()
        .filter_map(|l| l.split("extern \"C\" fn ").nth(1))
        .map(|rest| rest.split('(').next().unwrap())
        .collect();
    assert!(exports.len() >= 15, "{exports:?}");
    for name in exports {
        assert!(header.contains(&format!("{name}(")), "{name} missing from mlq.h");
    }
    for ty in ["MlqEngine", "MlqPlacement", "MlqDiscrete", "MlqCorrelations"] {
        assert!(header.contains(&format!("typedef struct {ty} {ty};")), "{ty}");
    }
    assert!(header.contains("MLQ_STATUS_GUARD_EXCEEDED = 4"));
}
