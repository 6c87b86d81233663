use epsmult::blowup;
use epsmult::ideal_ops;
use epsmult::session::parse_session;

fn main() {
    let text = "ring R = QQ[x, y, z];\n\
        ideal I = (x*(y^3 - z^3), y*(z^3 - x^3), z*(x^3 - y^3)) in R;";
    let s = parse_session(text).unwrap();
    let i = s.ideal("I").unwrap();
    let i3 = i.power(3);
    let sat3 = ideal_ops::saturate(&i3, None).unwrap();
    let mins = ideal_ops::minimal_generators(&sat3);
    let sat_min = epsmult::Ideal::new(i.ring().clone(), mins);
    let t = std::time::Instant::now();
    let pres = blowup::rees_presentation(&sat_min).unwrap();
    println!("rees of sat(I^3): {} gens, elapsed {:?}", pres.defining.len(), t.elapsed());
}
