use skein_core::braid::BraidWord;
use skein_core::character::*;
use skein_core::skein::*;
use skein_core::trace::*;

fn main() {
    let b = BraidWord::parse("s2", 4).unwrap();
    let rs = RelationSet::unknot();
    let gens = generate_module_relations(&b, 2).unwrap();
    println!("{} module relation generators", gens.len());
    // print the first few, normal-formed coordinatewise
    for g in gens.iter().take(6) {
        let mut parts = Vec::new();
        for key in [vec![], vec![1u8], vec![2], vec![1, 2]] {
            let c = rs.normal_form(&g.coord(&key)).unwrap();
            if !c.is_zero() {
                parts.push(format!("[{key:?}] {}", c.display(VarStyle::knot())));
            }
        }
        println!("  {}", parts.join(" ; "));
    }
    let s = two_bridge_alpha_scalar();
    let target = SkeinElement::basis(vec![1])
        .sub(&SkeinElement::unit().scale(&TracePoly::x(1).scale(&s)));
    println!("alpha1 target in span (len2): {:?}", in_module_span(&rs, &gens, &target));
    let gens3 = generate_module_relations(&b, 3).unwrap();
    println!("alpha1 target in span (len3): {:?}", in_module_span(&rs, &gens3, &target));
}
