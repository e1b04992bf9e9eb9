use serde_json::Value;

pub fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("sfactor").chain(args.iter().copied());
    let code = sfactor::cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

pub fn run_json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--format", "json", "--deterministic"];
    full.extend_from_slice(args);
    let (code, out, err) = run(&full);
    let doc = serde_json::from_str(&out).unwrap_or_else(|e| panic!("{args:?}: {e}\nstdout: {out}\nstderr: {err}"));
    (code, doc)
}
