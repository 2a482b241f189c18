//! Cohomological A-packets of the three real forms of SO_5.

use densitometer::packets::{packet_table, total_dim_check};

fn main() {
    for p in packet_table() {
        let reps: Vec<String> = p.representatives.iter().map(|w| w.to_string()).collect();
        println!(
            "{:?} {} ({}): size {}, reps [{}], degrees {:?}, total dim {} (check {})",
            p.form,
            p.levi,
            p.levi.parabolic_name(),
            p.size,
            reps.join(" "),
            p.degree_sets,
            p.total_dim,
            total_dim_check(p.form, p.levi)
        );
    }
}
