use epsmult::epsilon::{epsilon_report, EpsilonOptions};
use epsmult::ideal_ops;
use epsmult::poly::format_q;
use epsmult::session::parse_session;

fn main() {
    let text = "ring R = QQ[x1, x2, x3, x4];\n\
        ideal I = (x3*x4, x2*x4, x1*x4, x2*x3, x1*x3, x1*x2) in R;";
    let s = parse_session(text).unwrap();
    let i = s.ideal("I").unwrap();
    let t2 = std::time::Instant::now();
    println!("analytic spread = {} ({:?})", ideal_ops::analytic_spread(i).unwrap(), t2.elapsed());
    let t0 = std::time::Instant::now();
    let report = epsilon_report(i, 3, EpsilonOptions::default()).unwrap();
    println!("pipeline elapsed: {:?}", t0.elapsed());
    println!("series = {}", report.series.to_text());
    println!("epsilon = {}", format_q(&report.epsilon));
}
