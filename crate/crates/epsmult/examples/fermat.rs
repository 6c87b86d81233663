use epsmult::epsilon::{epsilon_from_series, pair_length_series};
use epsmult::ideal_ops;
use epsmult::poly::format_q;
use epsmult::session::parse_session;

fn main() {
    let text = "ring R = QQ[x, y, z];\n\
        ideal I = (x*(y^3 - z^3), y*(z^3 - x^3), z*(x^3 - y^3)) in R;";
    let s = parse_session(text).unwrap();
    let i = s.ideal("I").unwrap();
    let t0 = std::time::Instant::now();
    let i3 = i.power(3);
    let sat3 = ideal_ops::saturate(&i3, None).unwrap();
    let mins = ideal_ops::minimal_generators(&sat3);
    println!("sat(I^3): {} minimal generators, elapsed {:?}", mins.len(), t0.elapsed());
    let t1 = std::time::Instant::now();
    let series = pair_length_series(&i3, &sat3).unwrap();
    println!("pair series elapsed: {:?}", t1.elapsed());
    println!("series = {}", series.to_text());
    let eps = epsilon_from_series(&series, 3, 3).unwrap();
    println!("epsilon = {}", format_q(&eps));
}
