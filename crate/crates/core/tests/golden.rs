//! Encoded tables against the checked-in rendering. Regenerate with
//! `UPDATE_GOLDEN=1 cargo test -p exreg-core --test golden`.

use std::fs;
use std::path::PathBuf;

use exreg_core::tables::table_emit;
use exreg_core::FamilyId;

fn render_all() -> String {
    let mut out = String::new();
    for fam in FamilyId::ALL {
        out.push_str(&format!("[{fam}]\n"));
        out.push_str(&table_emit(fam));
        out.push('\n');
    }
    out
}

#[test]
fn tables_match_golden() {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden/tables.txt");
    let rendered = render_all();
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        fs::create_dir_all(path.parent().unwrap()).unwrap();
        fs::write(&path, &rendered).unwrap();
    }
    let golden = fs::read_to_string(&path).expect("golden file present");
    assert_eq!(rendered, golden);
}

#[test]
fn row_counts() {
    let counts: Vec<(FamilyId, usize)> = FamilyId::ALL
        .iter()
        .map(|&f| (f, table_emit(f).lines().count()))
        .collect();
    assert_eq!(
        counts,
        vec![
            (FamilyId::TwG2, 4),
            (FamilyId::TwB2, 2),
            (FamilyId::TriD4, 9),
            (FamilyId::TwF4, 6),
            (FamilyId::G2, 8),
            (FamilyId::F4, 11),
            (FamilyId::E6, 14),
            (FamilyId::TwE6, 14),
            (FamilyId::E7, 21),
            (FamilyId::E8, 26),
        ]
    );
}
