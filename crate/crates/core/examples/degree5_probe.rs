//! Timing probe for the large nested-resultant fixture.

use std::collections::BTreeMap;
use std::time::Instant;

use iterres_core::parse::parse;
use iterres_core::plan::{evaluate_plan, parse_plan};
use iterres_core::variable::{Variable, VariableOrdering};

fn main() {
    let ord = VariableOrdering::from_names(&["z", "y", "x"]).unwrap();
    let mut inputs = BTreeMap::new();
    inputs.insert(
        "f".to_string(),
        parse("-34*x^2*z^3 - 20*y^5 + 7*x^2*y^2 - 43*y^3*z + 63*x + 16*z", &ord).unwrap(),
    );
    inputs.insert(
        "g".to_string(),
        parse("13*x*z^4 - 27*z^4 - 21*x*y^2 + 30*y*z - 42*x - 81", &ord).unwrap(),
    );
    inputs.insert(
        "h".to_string(),
        parse("-65*x*z^4 + 13*z^5 + 30*x^3*z + 17*x*y^3 + 25*y*z + 78", &ord).unwrap(),
    );

    let t0 = Instant::now();
    let r1 = iterres_core::resultant::resultant(
        &inputs["f"],
        &inputs["g"],
        &Variable::new("z").unwrap(),
    )
    .unwrap();
    println!(
        "res_z(f,g): {:?}, deg_y = {:?}, deg_x = {:?}, terms = {}",
        t0.elapsed(),
        r1.degree_in(&Variable::new("y").unwrap()),
        r1.degree_in(&Variable::new("x").unwrap()),
        r1.num_terms()
    );

    let t0 = Instant::now();
    let r2 = iterres_core::resultant::resultant(
        &inputs["f"],
        &inputs["h"],
        &Variable::new("z").unwrap(),
    )
    .unwrap();
    println!(
        "res_z(f,h): {:?}, deg_y = {:?}, deg_x = {:?}, terms = {}",
        t0.elapsed(),
        r2.degree_in(&Variable::new("y").unwrap()),
        r2.degree_in(&Variable::new("x").unwrap()),
        r2.num_terms()
    );

    let t0 = Instant::now();
    let plan = parse_plan("res(y, res(z,f,g), res(z,f,h))").unwrap();
    let out = evaluate_plan(&plan, &inputs).unwrap();
    println!(
        "full plan: {:?}, deg_x = {:?}, terms = {}",
        t0.elapsed(),
        out.degree_in(&Variable::new("x").unwrap()),
        out.num_terms()
    );

    let t0 = Instant::now();
    let fact = iterres_core::analysis::factor_univariate(&out);
    match fact {
        Ok(f) => {
            let degs: Vec<u32> = f
                .factors
                .iter()
                .map(|(q, _)| q.total_degree().unwrap_or(0))
                .collect();
            println!("factorization: {:?}, degrees = {:?}", t0.elapsed(), degs);
        }
        Err(e) => println!("factorization failed after {:?}: {e}", t0.elapsed()),
    }
}
