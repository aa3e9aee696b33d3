//! Partitioned, checkpointed odd-length runs.
//!
//! Part `i` covers the elements whose outermost coset representative is the
//! `i`-th one. Parts accumulate privately and merge by polynomial addition,
//! so the result does not depend on completion order. After every part the
//! merged state is written to the checkpoint file (via a temporary file and
//! a rename).

use std::fs;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::roots::{build_root_system, CartanType};
use crate::weyl::DEFAULT_BUDGET;

use super::kernel::OddLengthKernel;
use super::{GfResult, Method, Restriction, SignMode, StatProfile};

/// Called with `(part, attempt)` before a part runs; returning `true` makes
/// that attempt panic. Used to exercise the retry path.
pub type FaultHook = Arc<dyn Fn(usize, u32) -> bool + Send + Sync>;

#[derive(Clone)]
pub struct RunOptions {
    /// Worker threads; `0` uses the rayon default.
    pub workers: usize,
    pub checkpoint: Option<PathBuf>,
    /// Continue from `checkpoint` if it exists.
    pub resume: bool,
    /// Stop after this many new parts (the run is then incomplete).
    pub max_parts: Option<usize>,
    /// Permit groups larger than `budget`.
    pub allow_large: bool,
    pub budget: u64,
    /// Order in which parts are scheduled; defaults to `0..parts`.
    pub part_order: Option<Vec<usize>>,
    pub fault: Option<FaultHook>,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            workers: 0,
            checkpoint: None,
            resume: false,
            max_parts: None,
            allow_large: false,
            budget: DEFAULT_BUDGET,
            part_order: None,
            fault: None,
        }
    }
}

impl std::fmt::Debug for RunOptions {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("RunOptions")
            .field("workers", &self.workers)
            .field("checkpoint", &self.checkpoint)
            .field("resume", &self.resume)
            .field("max_parts", &self.max_parts)
            .field("allow_large", &self.allow_large)
            .field("budget", &self.budget)
            .field("part_order", &self.part_order)
            .field("fault", &self.fault.is_some())
            .finish()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Checkpoint {
    pub ctype: CartanType,
    pub profile: String,
    /// Completed parts, ascending.
    pub done: Vec<usize>,
    pub partial: serde_json::Value,
    pub hash: String,
}

#[derive(Serialize)]
struct Hashed<'a> {
    ctype: CartanType,
    profile: &'a str,
    done: &'a [usize],
    partial: &'a serde_json::Value,
}

impl Checkpoint {
    fn new(ctype: CartanType, profile: StatProfile, done: Vec<usize>, partial: &Poly) -> Self {
        let partial = partial.to_json_value();
        let mut c = Checkpoint {
            ctype,
            profile: profile.name().into(),
            done,
            partial,
            hash: String::new(),
        };
        c.hash = c.content_hash();
        c
    }

    pub fn content_hash(&self) -> String {
        let body = serde_json::to_string(&Hashed {
            ctype: self.ctype,
            profile: &self.profile,
            done: &self.done,
            partial: &self.partial,
        })
        .expect("serializable");
        hex::encode(Sha256::digest(body.as_bytes()))
    }

    pub fn partial_poly(&self) -> Result<Poly> {
        Poly::from_json_value(&self.partial)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path)?;
        let c: Checkpoint = serde_json::from_str(&text)
            .map_err(|e| Error::CheckpointCorrupt(format!("{}: {e}", path.display())))?;
        if c.content_hash() != c.hash {
            return Err(Error::CheckpointCorrupt(format!(
                "{}: content hash does not match",
                path.display()
            )));
        }
        c.partial_poly()
            .map_err(|e| Error::CheckpointCorrupt(format!("{}: {e}", path.display())))?;
        Ok(c)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let mut tmp = path.as_os_str().to_owned();
        tmp.push(".tmp");
        let tmp = PathBuf::from(tmp);
        fs::write(&tmp, serde_json::to_string_pretty(self)?)?;
        fs::rename(&tmp, path)?;
        Ok(())
    }
}

struct State {
    done: Vec<usize>,
    partial: Poly,
    /// First write failure; reported once the parallel section ends.
    write_error: Option<Error>,
}

/// Computes the signed odd-length generating function part by part.
pub fn run_partitioned(
    ctype: CartanType,
    profile: StatProfile,
    opts: &RunOptions,
) -> Result<GfResult> {
    let start = Instant::now();
    if profile != StatProfile::OddLength {
        return Err(Error::UnsupportedProfile {
            profile: profile.name().into(),
            ctype,
        });
    }
    let order = ctype.group_order();
    if order > opts.budget && !opts.allow_large {
        return Err(Error::BudgetExceeded {
            order,
            budget: opts.budget,
        });
    }
    let rs = build_root_system(ctype)?;
    let kernel = OddLengthKernel::new(&rs);
    let parts = kernel.num_parts();

    let mut state = State {
        done: Vec::new(),
        partial: Poly::zero(&["x"]),
        write_error: None,
    };
    if let (Some(path), true) = (&opts.checkpoint, opts.resume) {
        if path.exists() {
            let c = Checkpoint::load(path)?;
            if c.ctype != ctype || c.profile != profile.name() {
                return Err(Error::CheckpointMismatch(format!(
                    "checkpoint is for {} / {}, run is {ctype} / {profile}",
                    c.ctype, c.profile
                )));
            }
            if c.done.iter().any(|&p| p >= parts) {
                return Err(Error::CheckpointCorrupt(format!(
                    "part index out of range for {ctype}"
                )));
            }
            state.partial = c.partial_poly()?;
            state.done = c.done;
        }
    }

    let order_list: Vec<usize> = opts
        .part_order
        .clone()
        .unwrap_or_else(|| (0..parts).collect());
    let mut todo: Vec<usize> = order_list
        .into_iter()
        .filter(|p| *p < parts && !state.done.contains(p))
        .collect();
    if let Some(m) = opts.max_parts {
        todo.truncate(m);
    }

    let state = Mutex::new(state);
    let run_one = |p: usize| -> Result<()> {
        let mut last = String::new();
        let mut counts = None;
        for attempt in 0..2u32 {
            let r = catch_unwind(AssertUnwindSafe(|| {
                if opts.fault.as_ref().is_some_and(|f| f(p, attempt)) {
                    panic!("injected fault in part {p}");
                }
                kernel.run_part(p, SignMode::Signed)
            }));
            match r {
                Ok(c) => {
                    counts = Some(c);
                    break;
                }
                Err(e) => {
                    last = e
                        .downcast_ref::<String>()
                        .cloned()
                        .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                        .unwrap_or_else(|| "worker panicked".into());
                }
            }
        }
        let counts = counts.ok_or(Error::WorkerFailure {
            part: p,
            message: last,
        })?;
        let poly = OddLengthKernel::to_poly(&counts)?;
        let mut st = state.lock().expect("no panics while holding the lock");
        st.partial = st.partial.add(&poly)?;
        st.done.push(p);
        st.done.sort_unstable();
        if let Some(path) = &opts.checkpoint {
            let c = Checkpoint::new(ctype, profile, st.done.clone(), &st.partial);
            if let Err(e) = c.save(path) {
                st.write_error.get_or_insert(e);
            }
        }
        Ok(())
    };

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.workers)
        .build()
        .map_err(|e| Error::Io(e.to_string()))?;
    pool.install(|| todo.par_iter().try_for_each(|&p| run_one(p)))?;

    let st = state.into_inner().expect("lock not poisoned");
    if let Some(e) = st.write_error {
        return Err(e);
    }
    Ok(GfResult {
        ctype,
        profile,
        restriction: Restriction::Full,
        poly: st.partial,
        group_order: order,
        method: Method::Roots,
        elapsed: start.elapsed(),
        parts_done: st.done.len(),
        parts_total: parts,
    })
}
