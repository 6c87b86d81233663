use epsmult::*;
use epsmult::epsilon::{epsilon_report, EpsilonOptions};
use epsmult::session::parse_session;

fn main() {
    let text = "ring R = QQ[x(3), y(4), z(5)];\n\
        ideal I = (y^2 - x*z, x^2*y - z^2, x^3 - y*z) in R;";
    let s = parse_session(text).unwrap();
    let i = s.ideal("I").unwrap();
    let t0 = std::time::Instant::now();
    let report = epsilon_report(i, 2, EpsilonOptions::default()).unwrap();
    println!("elapsed: {:?}", t0.elapsed());
    println!("series = {}", report.series.to_text());
    println!("epsilon = {}", poly::format_q(&report.epsilon));
    println!("dimension = {}", report.dimension);
}
