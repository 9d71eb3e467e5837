use std::process::{Command, Output};

const WORKED: &str = "(-q^-3/2 + q^3/2)*T(1,-1) + (q^-3/2 - q^3/2)*T(3,3)";

fn goldman(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_goldman"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = goldman(args);
    assert!(
        out.status.success(),
        "goldman {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    goldman(args).status.code().unwrap()
}

fn data_rows(table: &str) -> Vec<&str> {
    table.lines().skip(1).collect()
}

#[test]
fn refined_bracket_golden() {
    let out = stdout(&["bracket", "--mode", "refined", "straight:1,2", "straight:2,1"]);
    assert_eq!(out, format!("{WORKED}\n"));
}

#[test]
fn bracket_output_is_byte_identical_across_runs() {
    let args = ["bracket", "--mode", "refined", "--verbose", "0,0;0,1;1,2", "straight:2,1"];
    let first = goldman(&args).stdout;
    for _ in 0..3 {
        assert_eq!(goldman(&args).stdout, first);
    }
}

#[test]
fn straightforward_of_equal_classes_is_zero() {
    assert_eq!(stdout(&["bracket", "--mode", "straightforward", "straight:1,0", "straight:1,0"]), "0\n");
}

#[test]
fn direct_matches_straightforward() {
    for (a, b) in [("straight:2,1", "straight:1,1"), ("straight:1,2", "straight:2,1"), ("straight:2,0", "straight:-1,3")] {
        assert_eq!(
            stdout(&["bracket", "--mode", "direct", a, b]),
            stdout(&["bracket", "--mode", "straightforward", a, b])
        );
    }
}

#[test]
fn classical_bracket_of_worked_example() {
    assert_eq!(
        stdout(&["bracket", "--mode", "classical", "straight:1,2", "straight:2,1"]),
        "(3)*T(1,-1) + (-3)*T(3,3)\n"
    );
}

#[test]
fn refined_on_bent_path_is_labeled_experimental() {
    let out = stdout(&["bracket", "--mode", "refined", "0,0;0,1;1,2", "straight:2,1"]);
    assert!(out.contains("experimental: non-straight input"));
    assert!(out.contains(&format!("straightforward (end point classes): {WORKED}")));
    assert!(out.lines().any(|l| l.starts_with("discrepancy: ")));
}

#[test]
fn refined_json_lists_each_crossing() {
    let out = stdout(&["bracket", "--mode", "refined", "--json", "straight:1,2", "straight:2,1"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["expression"], WORKED);
    assert_eq!(v["experimental"], false);
    assert!(v["discrepancy"].is_null());
    assert_eq!(v["terms"].as_array().unwrap().len(), 3);
}

#[test]
fn intersection_tables() {
    let out = stdout(&["intersect", "straight:1,2", "straight:2,1"]);
    assert_eq!(data_rows(&out).len(), 3);
    let out = stdout(&["intersect", "straight:1,0", "straight:0,1"]);
    assert_eq!(data_rows(&out).len(), 1);
    let out = stdout(&["intersect", "straight:1,0", "straight:0,2"]);
    let rows = data_rows(&out);
    assert_eq!(rows.len(), 2);
    let point = |r: &str| r.split_whitespace().nth(1).unwrap().to_string();
    assert_eq!(point(rows[0]), point(rows[1]));
    assert_eq!(point(rows[0]), "(0,0)");
}

#[test]
fn intersection_json_matches_table() {
    let out = stdout(&["intersect", "--json", "straight:1,2", "straight:2,1"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let xs = v.as_array().unwrap();
    assert_eq!(xs.len(), 3);
    let total: i64 = xs.iter().map(|x| x["sign"].as_i64().unwrap()).sum();
    assert_eq!(total.abs(), 3);
}

#[test]
fn areas() {
    assert_eq!(stdout(&["area", "straight:1,2", "0,0;1,0;1,2"]), "-1\n");
    assert_eq!(stdout(&["area", "straight:1,2", "0,0;0,2;1,2"]), "1\n");
    assert_eq!(stdout(&["area", "0,0;2/3,4/3;3,3", "0,0;2/3,4/3;3,3"]), "0\n");
    let expected = [("0,0;2,1;3,3", "3/2"), ("0,0;1/3,2/3;1,1;7/3,5/3;3,3", "1/2"), ("0,0;2/3,4/3;2,2;8/3,7/3;3,3", "-1/2")];
    for (p, a) in expected {
        assert_eq!(stdout(&["area", p, "straight:3,3"]), format!("{a}\n"));
    }
    // a closed loop on its own
    assert_eq!(stdout(&["area", "0,0;2,0;2,1;0,1;0,0"]), "2\n");
}

#[test]
fn holonomy_and_wilson() {
    assert_eq!(stdout(&["holonomy", "straight:1,2"]), "E(1,2)\n");
    assert_eq!(stdout(&["holonomy", "0,0;1,0;1,2"]), "q*E(1,2)\n");
    assert_eq!(stdout(&["wilson", "0,0;1,0;1,2"]), "q*T(1,2)\n");
    assert_eq!(stdout(&["wilson", "straight:-1,1"]), "T(1,-1)\n");
}

#[test]
fn reroute_paths_round_trip_through_the_parser() {
    let out = stdout(&["reroute", "straight:1,2", "straight:2,1"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 6);
    for line in lines {
        let f: Vec<&str> = line.split_whitespace().collect();
        // "#i o path through P end E wilson W"
        let (path, wilson) = (f[2], f[8]);
        assert_eq!(stdout(&["wilson", path]).trim(), wilson);
        assert_eq!(stdout(&["area", path, path]), "0\n");
    }
    assert!(out.contains("#1 + 0,0;1/3,2/3;1,1;7/3,5/3;3,3 through (1,1)"));
}

#[test]
fn parallelogram_report() {
    let out = stdout(&["parallelogram", "straight:1,2", "straight:2,1"]);
    assert!(out.contains("parallelogram: (0,0) (1,2) (3,3) (2,1)"));
    assert!(out.contains("admissible points (3): (1,1) (2,1) (2,2)"));
    assert!(out.contains("admissible points (3): (-1,0) (0,0) (0,1)"));
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["parallelogram", "--json", "straight:1,2", "straight:2,1"])).unwrap();
    assert_eq!(v["parallelogram"]["pick_area"], "3");
}

#[test]
fn constants_are_printed() {
    let out = stdout(&["constants"]);
    assert!(out.contains("area_orientation (kappa) = +1"));
    assert!(out.contains("phase_sign (sigma) = +1"));
    assert!(out.contains("self-check: ok"));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(code(&[]), 1);
    assert_eq!(code(&["frobnicate"]), 1);
    assert_eq!(code(&["bracket", "--mode", "bogus", "straight:1,0", "straight:0,1"]), 1);
    assert_eq!(code(&["area", "0,0;1,zz"]), 1);
    assert_eq!(code(&["area", "0,0;1/2,1"]), 1);
    assert_eq!(code(&["bracket", "--mode", "straightforward", "0,0;1,0;1,1", "straight:0,1"]), 1);
    assert_eq!(code(&["parallelogram", "straight:1,1", "straight:2,2"]), 1);
    assert_eq!(code(&["reroute", "straight:1,2", "straight:2,1", "--index", "3"]), 1);
    assert_eq!(code(&["verify", "--bound", "0"]), 1);
    assert_eq!(code(&["--help"]), 0);
}

#[test]
fn verify_bound_one_has_no_reducible_pairs() {
    let out = goldman(&["verify", "--bound", "1", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["invariants_passed"], true);
    assert_eq!(v["conjecture_mismatches"], 0);
    let pairs = v["sweep"]["pairs"].as_array().unwrap();
    assert_eq!(pairs.len(), 81);
    for p in pairs {
        assert_ne!(p["sector"], "reducible", "{p}");
        // (1,1) x (1,-1) reaches 2
        assert!(p["determinant"].as_i64().unwrap().abs() <= 2, "{p}");
    }
}

#[test]
fn verify_bound_two_includes_reducible_pairs_and_flags_mismatches() {
    let out = goldman(&["verify", "--bound", "2", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["invariants_passed"], true);
    let pairs = v["sweep"]["pairs"].as_array().unwrap();
    assert!(pairs.iter().any(|p| p["sector"] == "reducible"));
    for p in pairs {
        if p["sector"] == "coprime" {
            assert_eq!(p["refined_matches"], true, "{p}");
        }
        if p["refined_matches"] == false {
            assert_eq!(p["p2_reducible"], true, "{p}");
        }
        assert_eq!(p["direct_matches"], true, "{p}");
    }
    let text = stdout(&["verify", "--bound", "2"]);
    assert!(text.contains("invariants: all passed"));
    assert!(text.contains("mismatching pairs (flagged, not an invariant failure)"));
}

#[test]
fn verify_is_the_same_sequential_and_parallel() {
    let a = stdout(&["verify", "--bound", "1", "--json", "--all"]);
    let b = stdout(&["verify", "--bound", "1", "--json", "--all", "--sequential"]);
    assert_eq!(a, b);
}

mod svg {
    use super::*;

    fn render(args: &[&str]) -> String {
        let dir = std::env::temp_dir().join(format!("goldman-cli-test-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let file = dir.join(format!("{}.svg", args.join("_").replace([';', ',', ':', '/'], "-")));
        let file_s = file.to_str().unwrap().to_string();
        let mut full = vec!["render", "--out", &file_s];
        full.extend_from_slice(args);
        stdout(&full);
        std::fs::read_to_string(&file).unwrap()
    }

    fn count(doc: &roxmltree::Document, tag: &str, class: &str) -> usize {
        doc.descendants()
            .filter(|n| n.has_tag_name(tag))
            .filter(|n| n.attribute("class").is_some_and(|c| c.split(' ').any(|w| w == class)))
            .count()
    }

    fn view_box(doc: &roxmltree::Document) -> (f64, f64) {
        let vb: Vec<f64> = doc
            .root_element()
            .attribute("viewBox")
            .unwrap()
            .split(' ')
            .map(|s| s.parse().unwrap())
            .collect();
        (vb[2], vb[3])
    }

    fn assert_coordinates_in_view(doc: &roxmltree::Document) {
        let (w, h) = view_box(doc);
        for n in doc.descendants().filter(|n| n.has_tag_name("polyline") || n.has_tag_name("polygon")) {
            for pair in n.attribute("points").unwrap().split(' ') {
                let (x, y) = pair.split_once(',').unwrap();
                for (s, max) in [(x, w), (y, h)] {
                    assert_eq!(s.split_once('.').unwrap().1.len(), 3, "{s}");
                    let v: f64 = s.parse().unwrap();
                    // one unit (40 px) of margin on every side
                    assert!((40.0..=max - 40.0).contains(&v), "{v} outside margin of {max}");
                }
            }
        }
    }

    #[test]
    fn parallelogram_shows_two_interior_dots() {
        let text = render(&["straight:1,2", "straight:2,1", "--parallelogram"]);
        assert!(text.contains("fixed precision 3 decimal places"));
        let doc = roxmltree::Document::parse(&text).unwrap();
        assert_eq!(count(&doc, "circle", "interior"), 2);
        assert_eq!(count(&doc, "circle", "boundary"), 4);
        assert_eq!(count(&doc, "polygon", "parallelogram"), 1);
        let pre: Vec<_> = doc
            .descendants()
            .filter(|n| n.attribute("class") == Some("pre-parallelogram"))
            .collect();
        assert_eq!(pre.len(), 1);
        assert!(pre[0].attribute("stroke-dasharray").is_some());
        assert_coordinates_in_view(&doc);
    }

    #[test]
    fn single_path_is_only_a_polyline() {
        let text = render(&["0,0;1/3,2/3;1,1;7/3,5/3;3,3"]);
        let doc = roxmltree::Document::parse(&text).unwrap();
        let shapes: Vec<_> = doc
            .descendants()
            .filter(|n| n.is_element() && !matches!(n.tag_name().name(), "svg" | "rect"))
            .collect();
        assert_eq!(shapes.len(), 1);
        assert!(shapes[0].has_tag_name("polyline"));
        assert_coordinates_in_view(&doc);
        // y axis flipped: the path starts at the bottom left of its box
        let first = shapes[0].attribute("points").unwrap().split(' ').next().unwrap();
        assert_eq!(first, "40.000,160.000");
    }

    #[test]
    fn worked_example_reroutings_are_three_plus_three() {
        let text = render(&["straight:1,2", "straight:2,1", "--reroutings", "--dots"]);
        let doc = roxmltree::Document::parse(&text).unwrap();
        assert_eq!(count(&doc, "polyline", "reroute-plus"), 3);
        assert_eq!(count(&doc, "polyline", "reroute-minus"), 3);
        assert_eq!(count(&doc, "polyline", "path"), 2);
        assert!(count(&doc, "circle", "lattice") > 0);
        assert_coordinates_in_view(&doc);
    }

    #[test]
    fn area_shading() {
        let text = render(&["straight:1,2", "0,0;1,0;1,2", "--area"]);
        let doc = roxmltree::Document::parse(&text).unwrap();
        assert_eq!(count(&doc, "polygon", "area"), 1);
        assert_eq!(code(&["render", "--out", "/dev/null", "straight:1,2", "--area"]), 1);
    }
}
