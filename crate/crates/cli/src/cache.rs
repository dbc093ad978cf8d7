//! On-disk cache of quantum products.
//!
//! One file per format version in the directory named by
//! `QSCHUBERT_CACHE_DIR`. After a header line, each line is a record
//! `k,n|λ|μ|ν|c` giving one term `c·q^d σ_ν` of `σ_λ * σ_μ`, with
//! `d = (|λ| + |μ| - |ν|) / n` and `λ <= μ` lexicographically. Products
//! never vanish, so a pair is cached exactly when it has a record. The file
//! is only ever replaced whole, through a temporary file and a rename.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use qschubert::{BoxShape, BoxedPartition, Partition, QuantumClass};

pub const ENV_VAR: &str = "QSCHUBERT_CACHE_DIR";
pub const FILE_NAME: &str = "qlr-v1.cache";
pub const HEADER: &str = "# qschubert quantum product cache v1";

type Key = (BoxShape, Partition, Partition);

#[derive(Debug)]
pub struct Cache {
    path: PathBuf,
    entries: BTreeMap<Key, QuantumClass>,
    dirty: bool,
}

fn key(lambda: &BoxedPartition, mu: &BoxedPartition) -> Key {
    let (a, b) = if lambda <= mu { (lambda, mu) } else { (mu, lambda) };
    (a.shape(), a.partition().clone(), b.partition().clone())
}

fn parse_record(line: &str) -> Option<(Key, BoxedPartition, usize, BigInt)> {
    let fields: Vec<&str> = line.split('|').collect();
    let [shape, l, m, nu, c] = fields[..] else {
        return None;
    };
    let shape: BoxShape = shape.parse().ok()?;
    let (l, m) = (shape.parse_boxed(l).ok()?, shape.parse_boxed(m).ok()?);
    let nu = shape.parse_boxed(nu).ok()?;
    let total = l.weight() + m.weight();
    if nu.weight() > total || !(total - nu.weight()).is_multiple_of(shape.n()) {
        return None;
    }
    let d = (total - nu.weight()) / shape.n();
    Some((key(&l, &m), nu, d, c.parse().ok()?))
}

fn csv(p: &Partition) -> String {
    p.parts().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

impl Cache {
    /// The cache named by the environment, if any. Unreadable or malformed
    /// files are ignored with a warning; the cache is only an accelerator.
    pub fn from_env() -> Option<Cache> {
        let dir = std::env::var_os(ENV_VAR).filter(|d| !d.is_empty())?;
        Some(Cache::open(Path::new(&dir)))
    }

    pub fn open(dir: &Path) -> Cache {
        let path = dir.join(FILE_NAME);
        let mut cache = Cache { path, entries: BTreeMap::new(), dirty: false };
        let Ok(text) = fs::read_to_string(&cache.path) else {
            return cache;
        };
        let mut lines = text.lines();
        if lines.next() != Some(HEADER) {
            eprintln!("warning: ignoring cache {} with unknown header", cache.path.display());
            return cache;
        }
        for line in lines.filter(|l| !l.is_empty()) {
            let Some((key, nu, d, c)) = parse_record(line) else {
                eprintln!("warning: ignoring malformed cache {}", cache.path.display());
                cache.entries.clear();
                return cache;
            };
            let entry = cache.entries.entry(key.clone()).or_insert_with(|| QuantumClass::zero(key.0));
            *entry = &*entry + &QuantumClass::monomial(&nu, d, c);
        }
        cache
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, lambda: &BoxedPartition, mu: &BoxedPartition) -> Option<&QuantumClass> {
        self.entries.get(&key(lambda, mu))
    }

    pub fn insert(&mut self, lambda: &BoxedPartition, mu: &BoxedPartition, product: &QuantumClass) {
        let k = key(lambda, mu);
        if self.entries.get(&k) != Some(product) {
            self.entries.insert(k, product.clone());
            self.dirty = true;
        }
    }

    /// Cached pairs with their products, in a fixed order.
    pub fn entries(&self) -> impl Iterator<Item = (BoxedPartition, BoxedPartition, &QuantumClass)> {
        self.entries.iter().map(|((s, l, m), p)| {
            let boxed = |x: &Partition| s.boxed(x.clone()).expect("cached partitions are boxed");
            (boxed(l), boxed(m), p)
        })
    }

    /// Writes the whole cache if anything changed.
    pub fn save(&mut self) -> std::io::Result<()> {
        if !self.dirty {
            return Ok(());
        }
        let dir = self.path.parent().expect("cache file has a directory");
        fs::create_dir_all(dir)?;
        let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
        {
            let mut w = std::io::BufWriter::new(tmp.as_file_mut());
            writeln!(w, "{HEADER}")?;
            for ((s, l, m), product) in &self.entries {
                for (_, nu, c) in product.terms() {
                    writeln!(w, "{},{}|{}|{}|{}|{c}", s.k(), s.n(), csv(l), csv(m), csv(nu))?;
                }
            }
            w.flush()?;
        }
        tmp.as_file().sync_all()?;
        tmp.persist(&self.path).map_err(|e| e.error)?;
        self.dirty = false;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn save_and_reload() {
        let dir = tempfile::tempdir().unwrap();
        let s = BoxShape::new(2, 4).unwrap();
        let (a, b) = (s.parse_boxed("2,1").unwrap(), s.parse_boxed("1").unwrap());
        let p = qschubert::quantum_product(s, &a, &b).unwrap();
        let mut cache = Cache::open(dir.path());
        assert!(cache.is_empty());
        cache.insert(&a, &b, &p);
        cache.save().unwrap();
        let text = fs::read_to_string(cache.path()).unwrap();
        assert_eq!(text, format!("{HEADER}\n2,4|1|2,1|2,2|1\n2,4|1|2,1||1\n"));
        let again = Cache::open(dir.path());
        assert_eq!(again.get(&b, &a), Some(&p));
        assert_eq!(again.len(), 1);
    }

    #[test]
    fn malformed_files_are_ignored() {
        let dir = tempfile::tempdir().unwrap();
        fs::write(dir.path().join(FILE_NAME), format!("{HEADER}\n2,4|9|1|1|1\n")).unwrap();
        assert!(Cache::open(dir.path()).is_empty());
        fs::write(dir.path().join(FILE_NAME), "# other\n").unwrap();
        assert!(Cache::open(dir.path()).is_empty());
    }
}
