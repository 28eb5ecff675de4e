//! Regenerates the checked-in golden automaton files.
use std::path::PathBuf;

fn main() -> fibnum::Result<()> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("golden");
    std::fs::create_dir_all(&dir)?;
    for name in fibnum::synthesis::SYNTH_NAMES {
        let a = fibnum::synthesis::synth_by_name(name)?;
        let text = fibnum::format::export_native(&a);
        std::fs::write(dir.join(format!("{name}.native")), text)?;
        println!("{name}: live={} total={}", a.live_state_count(), a.total_state_count());
    }
    Ok(())
}
