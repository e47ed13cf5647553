#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

pub fn complete_edges(n: u32) -> Vec<(u32, u32)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

pub fn cycle_edges(n: u32) -> Vec<(u32, u32)> {
    (0..n).map(|i| (i, (i + 1) % n)).collect()
}

pub fn star_edges(leaves: u32) -> Vec<(u32, u32)> {
    (1..=leaves).map(|v| (0, v)).collect()
}

pub fn petersen_edges() -> Vec<(u32, u32)> {
    let mut e = Vec::new();
    for i in 0..5 {
        e.push((i, (i + 1) % 5));
        e.push((i, i + 5));
        e.push((5 + i, 5 + (i + 2) % 5));
    }
    e
}

pub fn k23_edges() -> Vec<(u32, u32)> {
    vec![(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]
}

pub fn write_graph(dir: &Path, name: &str, edges: &[(u32, u32)]) -> PathBuf {
    let path = dir.join(name);
    let text: String = edges.iter().map(|(u, v)| format!("{u} {v}\n")).collect();
    std::fs::write(&path, text).unwrap();
    path
}

pub fn symmine(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symmine")).args(args).env_remove("SYMMINE_THREADS").output().expect("binary runs")
}

pub fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}
