use epsmult::epsilon::{epsilon_report, EpsilonOptions};
use epsmult::oracle;
use epsmult::poly::{format_q, DegreeVector};
use epsmult::session::parse_session;

fn main() {
    let text = "ring R = QQ[x(10), y(11), z(13)];\n\
        ideal P = (x^2*z - y^3, x^5 - y*z^3, x^3*y^2 - z^4) in R;";
    let s = parse_session(text).unwrap();
    let i = s.ideal("P").unwrap();
    let t0 = std::time::Instant::now();
    let report = epsilon_report(i, 3, EpsilonOptions::default()).unwrap();
    println!("pipeline elapsed: {:?}", t0.elapsed());
    println!("series = {}", report.series.to_text());
    println!("epsilon = {}", format_q(&report.epsilon));
    for v in 0..6i64 {
        println!(
            "eps({}) = {}",
            v,
            report.series.coefficient(&DegreeVector::single(v)).unwrap()
        );
    }
    let t1 = std::time::Instant::now();
    let table = oracle::epsilon_table(i, 3).unwrap();
    println!("oracle elapsed: {:?}", t1.elapsed());
    for (v, l) in table {
        println!("oracle eps({}) = {}", v, l);
    }
}
