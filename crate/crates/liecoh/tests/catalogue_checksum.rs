//! Freezes the embedded group catalogue: any edit to the shipped table
//! changes the canonical JSON dump and must be made deliberately, together
//! with this checksum.

use sha2::{Digest, Sha256};

const EXPECTED: &str = "33f328d45549546aae791dab5cffce27d7349384319d9ed284fe236e2156da9d";

#[test]
fn catalogue_checksum_is_frozen() {
    let json = serde_json::to_string(&liecoh::liedata::dump_tables()).unwrap();
    let digest = Sha256::digest(json.as_bytes());
    let hex = format!("{digest:x}");
    assert_eq!(
        hex, EXPECTED,
        "the embedded catalogue changed; update the frozen checksum only \
         after re-verifying the data"
    );
}
