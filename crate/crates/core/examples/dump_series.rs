//! Prints a generating function as JSON, e.g. `dump_series roots 2 4`.

use permroots::egf::{power_product_egf, root_count_egf};

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let usage = "usage: dump_series (roots|product) <m> <n>";
    let (kind, m, n) = match args.as_slice() {
        [_, k, m, n] => (k.as_str(), m.parse().expect(usage), n.parse().expect(usage)),
        _ => panic!("{usage}"),
    };
    let json = match kind {
        "roots" => root_count_egf(m, n).unwrap().to_json(),
        "product" => power_product_egf(m, n).unwrap().to_json(),
        _ => panic!("{usage}"),
    };
    println!("{}", serde_json::to_string_pretty(&json).unwrap());
}
