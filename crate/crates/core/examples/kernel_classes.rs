//! Groups all 2^16 indicator sets by their right-polarity image.

use mbti_szondi::{Connection, Interpretation};

fn main() {
    let conn = Connection::new(Interpretation::builtin());
    let mut classes = conn.kernel_classes();
    println!("{} classes over {} indicator sets", classes.len(), 1 << 16);

    classes.sort_by_key(|c| std::cmp::Reverse(c.len()));
    for class in classes.iter().take(8) {
        let closed = conn.closure_left(class[0]);
        let count = conn.right_polarity(closed).count();
        println!(
            "{:>6} sets, closed set {closed}, {count} profiles",
            class.len()
        );
    }
}
