//! Catalog files come from disk and may be arbitrary bytes: parsing must
//! never panic, and anything that parses must survive a serialize/reparse
//! round trip unchanged.

#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(records) = eaqmds::parse_catalog_bytes(data) {
        for rec in &records {
            let line = rec.to_json_line();
            let back = eaqmds::parse_catalog_str(&line).expect("round trip parses");
            assert_eq!(back.len(), 1);
            assert_eq!(&back[0], rec);
        }
    }
});
