//! The shipped JSON files are exactly the serialized builders.
//! Run with `UPDATE_FIXTURES=1` to regenerate them.

use std::path::PathBuf;

use crossed_hopf_cli::fixtures::shipped;
use crossed_hopf_cli::format::{parse_structure_file, serialize};

fn path(stem: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(format!("{stem}.json"))
}

#[test]
fn shipped_files_match_their_builders() {
    let update = std::env::var("UPDATE_FIXTURES").is_ok_and(|v| v == "1");
    for (stem, built) in shipped() {
        let text = serialize(&built);
        if update {
            std::fs::write(path(stem), &text).unwrap();
        }
        let on_disk = std::fs::read_to_string(path(stem)).unwrap_or_else(|e| panic!("{stem}: {e}"));
        assert_eq!(on_disk, text, "{stem}.json is stale; rerun with UPDATE_FIXTURES=1");
        let parsed = parse_structure_file(&on_disk).unwrap_or_else(|d| panic!("{stem}: {d:?}"));
        assert_eq!(parsed, built, "{stem} does not parse back to its builder");
        assert_eq!(serialize(&parsed), text, "{stem} serialization is not canonical");
    }
}
