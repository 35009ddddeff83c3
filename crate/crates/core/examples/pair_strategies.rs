//! The four ways of enumerating the amplitude pairs a single-qubit gate mixes.
//! They all produce the same pairs in the same order.

use qpairs::pairs;

type Listing = Vec<(&'static str, Vec<(usize, usize)>)>;

pub fn run_example(n: usize, t: usize) -> qpairs::Result<Listing> {
    Ok(vec![
        (
            "traverse and recognize",
            pairs::traverse_recognize(n, t)?.collect(),
        ),
        (
            "group chunks",
            pairs::group_traverse(n, t)?
                .flat_map(|c| c.pairs().collect::<Vec<_>>())
                .collect(),
        ),
        ("nested loops", pairs::concatenate(n, t)?.collect()),
        ("bit insertion", pairs::insert(n, t)?.collect()),
        (
            "bit insertion, control on qubit 0",
            pairs::controlled(n, t, &[0])?.collect(),
        ),
    ])
}

fn main() -> qpairs::Result<()> {
    let (n, t) = (4, 1);
    println!("pairs for target {t} on {n} qubits");
    for (name, list) in run_example(n, t)? {
        println!("{name:>34}: {list:?}");
    }
    for j in [0, 3] {
        println!("pair #{j}: {:?}", pairs::pair_at(j, t));
    }
    Ok(())
}
