use epsmult::blowup;
use epsmult::ideal_ops;
use epsmult::session::parse_session;

fn main() {
    let text = "ring R = QQ[x, y, z];\n\
        ideal I = (x*(y^3 - z^3), y*(z^3 - x^3), z*(x^3 - y^3)) in R;";
    let s = parse_session(text).unwrap();
    let i = s.ideal("I").unwrap();
    let t0 = std::time::Instant::now();
    let i3 = i.power(3);
    println!("I^3 gens: {}", i3.generators().len());
    let sat3 = ideal_ops::saturate(&i3, None).unwrap();
    println!("sat elapsed {:?}", t0.elapsed());
    let mins = ideal_ops::minimal_generators(&sat3);
    println!("sat(I^3): {} minimal generators", mins.len());
    for g in &mins {
        println!("  deg {}", i.ring().multidegree(g).unwrap());
    }
    let t1 = std::time::Instant::now();
    let pres_small = blowup::rees_presentation(&i3).unwrap();
    println!("rees of I^3: {} defining gens, elapsed {:?}", pres_small.defining.len(), t1.elapsed());
}
