use std::fs;
use std::path::{Path, PathBuf};

use flagsphere::io::{
    emit_complex, emit_complex_json, emit_graph, emit_graph_json, parse_complex,
    parse_complex_json, parse_graph, parse_graph_json,
};

fn corpus() -> Vec<PathBuf> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data/io");
    let mut files: Vec<PathBuf> = fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .collect();
    files.sort();
    files
}

/// Token-level normal form of a text file whose facets are already maximal.
fn canonicalize(text: &str) -> String {
    let mut header = String::new();
    let mut vlines = Vec::new();
    let mut body: Vec<Vec<usize>> = Vec::new();
    for line in text.lines() {
        let t: Vec<&str> = line.split_whitespace().collect();
        match t.first() {
            None => {}
            Some(s) if s.starts_with('#') => {}
            Some(&"graph") | Some(&"complex") => header = format!("{} {}", t[0], t[1]),
            Some(&"v") => {
                if t[1] != t[2] {
                    vlines.push((t[1].parse::<usize>().unwrap(), t[2].to_string()));
                }
            }
            Some(_) => {
                let mut idx: Vec<usize> = t[1..].iter().map(|x| x.parse().unwrap()).collect();
                idx.sort_unstable();
                body.push(idx);
            }
        }
    }
    vlines.sort();
    body.sort();
    let tag = if header.starts_with("graph") {
        "e"
    } else {
        "f"
    };
    let mut out = format!("{header}\n");
    for (i, l) in vlines {
        out.push_str(&format!("v {i} {l}\n"));
    }
    for b in body {
        let s: Vec<String> = b.iter().map(ToString::to_string).collect();
        out.push_str(&if s.is_empty() {
            format!("{tag}\n")
        } else {
            format!("{tag} {}\n", s.join(" "))
        });
    }
    out
}

#[test]
fn corpus_has_fifty_files() {
    assert!(corpus().len() >= 50);
}

#[test]
fn text_round_trip() {
    for path in corpus().iter().filter(|p| p.extension().unwrap() == "txt") {
        let text = fs::read_to_string(path).unwrap();
        let emitted = if text.contains("graph") {
            emit_graph(&parse_graph(&text).unwrap())
        } else {
            emit_complex(&parse_complex(&text).unwrap())
        };
        assert_eq!(emitted, canonicalize(&text), "{}", path.display());
        let again = if text.contains("graph") {
            emit_graph(&parse_graph(&emitted).unwrap())
        } else {
            emit_complex(&parse_complex(&emitted).unwrap())
        };
        assert_eq!(again, emitted, "{}", path.display());
    }
}

#[test]
fn json_twins_agree_with_text() {
    for path in corpus().iter().filter(|p| p.extension().unwrap() == "json") {
        let json = fs::read_to_string(path).unwrap();
        let twin = fs::read_to_string(path.with_extension("txt")).unwrap();
        let name = path.file_name().unwrap().to_str().unwrap();
        if name.starts_with("graph") {
            let g = parse_graph_json(&json).unwrap();
            assert_eq!(emit_graph(&g), canonicalize(&twin), "{name}");
            assert_eq!(parse_graph_json(&emit_graph_json(&g)).unwrap(), g);
        } else {
            let c = parse_complex_json(&json).unwrap();
            assert_eq!(emit_complex(&c), canonicalize(&twin), "{name}");
            assert_eq!(
                emit_complex_json(&parse_complex_json(&emit_complex_json(&c)).unwrap()),
                emit_complex_json(&c)
            );
        }
    }
}

#[test]
fn malformed_lines_report_their_number() {
    let cases = [
        ("graph 3\ne 0 1\ne 1 -2\n", 3),
        ("graph 3\ne 0 1\n\n\ne 1 3\n", 5),
        ("graph 2\ne 0 1 1\n", 2),
        ("graph x\n", 1),
        ("complex 2\nf 0 1\nf 0 2\n", 3),
        ("complex 2\nf 0 1\ne 0 1\n", 3),
    ];
    for (text, want) in cases {
        let err = if text.starts_with("graph") {
            parse_graph(text).unwrap_err()
        } else {
            parse_complex(text).unwrap_err()
        };
        match err {
            flagsphere::Error::Parse { line, .. } => assert_eq!(line, want, "{text:?}"),
            other => panic!("{other:?}"),
        }
    }
}
