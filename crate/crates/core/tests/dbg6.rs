use venn_core::construct::rasterize;
use venn_core::construct::EdwardsParams;

#[test]
fn dbg6() {
    let n = 6;
    let params = EdwardsParams::new(n);
    let g = rasterize(n, 1024, 12.0, |s, x, y| params.interior(s + 1, x, y)).unwrap();
    println!("validate: {}", g.validate().passed());
    let census = g.region_census();
    println!("labels: {} total: {}", census.label_count(), census.total_components());
    for (label, count) in census.counts() {
        if *count != 1 {
            println!("  label {label}: {count} components");
        }
    }
    let mut missing = vec![];
    for bits in 0..(1u32 << n) {
        let s = venn_core::SignVector::new(bits, n);
        if census.count(&s) == 0 { missing.push(s.to_string()); }
    }
    println!("missing: {missing:?}");
}
