//! Pins the JSON report format. Regenerate with `FIRLAB_BLESS=1 cargo test
//! -p firlab-cli --test golden` after an intentional schema change, and bump
//! the schema version.

use std::path::PathBuf;

const CASES: &[(&str, &[&str])] = &[
    ("llcm", &["--field", "gf(2,2)", "llcm", "t+1", "t+w"]),
    ("rgcd", &["rgcd", "t^2+1", "t+w"]),
    ("factor", &["factor", "t^3+1"]),
    ("similar", &["similar", "t+1", "t+w"]),
    ("eigenring", &["eigenring", "t^2+w"]),
    ("lambda_dim", &["lambda-dim", "t^2+1", "t+1"]),
    ("vset", &["vset", "t^2+1"]),
    ("classes", &["classes", "t+1", "t+w", "t"]),
    ("rank_theorems", &["check-rank-theorems", "t+1,t", "t+w"]),
    ("wedderburn", &["wedderburn", "t^2+1"]),
    ("wedderburn_t2", &["wedderburn", "t^2"]),
    ("product_check", &["--bound", "3", "product-check", "t+1", "t+w"]),
    ("series_sum", &["series-sum", "4", "6"]),
    ("series_intersect", &["series-intersect", "1/2*x", "1/3*x^2"]),
    ("series_witness", &["series-witness", "3"]),
    ("suite", &["suite", "--seed", "7", "--samples", "5"]),
    ("parse_error", &["mul", "t^^2", "t"]),
];

#[test]
fn json_reports_match_golden_files() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let bless = std::env::var_os("FIRLAB_BLESS").is_some();
    let mut mismatched = Vec::new();
    for (name, args) in CASES {
        let argv = ["firlab", "--json"].into_iter().chain(args.iter().copied());
        let out = firlab_cli::run(argv).stdout;
        let path = dir.join(format!("{name}.json"));
        if bless {
            std::fs::write(&path, &out).unwrap();
            continue;
        }
        let want = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        if want != out {
            mismatched.push(format!("{name}:\n  want {want}  got  {out}"));
        }
    }
    assert!(mismatched.is_empty(), "{}", mismatched.join("\n"));
}
