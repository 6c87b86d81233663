use epsmult::epsilon::{epsilon_report, EpsilonOptions};
use epsmult::oracle;
use epsmult::poly::format_q;
use epsmult::session::parse_session;

fn main() {
    // defining ideal of the monomial curve (11,14,10):
    // minors of [[x^2, y^2, z^3], [y, z^2, x^2]]
    let text = "ring R = QQ[x(11), y(14), z(10)];\n\
        ideal P = (x^2*z^2 - y^3, x^4 - y*z^3, x^2*y^2 - z^5) in R;";
    let s = parse_session(text).unwrap();
    let i = s.ideal("P").unwrap();
    let t1 = std::time::Instant::now();
    let table = oracle::epsilon_table(i, 2).unwrap();
    println!("oracle elapsed: {:?}", t1.elapsed());
    for (v, l) in table {
        println!("oracle eps({}) = {}", v, l);
    }
    let t0 = std::time::Instant::now();
    let report = epsilon_report(i, 4, EpsilonOptions::default()).unwrap();
    println!("pipeline elapsed: {:?}", t0.elapsed());
    println!("series = {}", report.series.to_text());
    println!("epsilon = {}", format_q(&report.epsilon));
}
