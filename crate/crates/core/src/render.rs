//! SVG pictures of regions, witness paths and generator paths.

use std::fmt::Write;

use crate::geometry::{Point, ToricRegion};
use crate::lattice::PathGenerator;
use crate::obstruct::WitnessPath;
use crate::rational::Rational;

pub const CANVAS: u32 = 800;
const DIGITS: u32 = 6;
const COLORS: [&str; 4] = ["#1f5fbf", "#c0392b", "#7f8c8d", "#8e44ad"];

#[derive(Debug, Clone, Default)]
pub struct Scene<'a> {
    pub regions: Vec<&'a ToricRegion>,
    pub witness: Option<&'a WitnessPath>,
    pub generator: Option<&'a PathGenerator>,
}

fn num(r: &Rational) -> String {
    r.to_decimal_string(DIGITS)
}

impl Scene<'_> {
    fn extent(&self) -> Rational {
        let mut m = Rational::one();
        for r in &self.regions {
            m = m.max(r.a()).max(r.b());
        }
        if let Some(w) = self.witness {
            for p in &w.points {
                m = m.max(p.x.clone()).max(p.y.clone());
            }
        }
        if let Some(g) = self.generator {
            let (x, y) = g.extents();
            m = m.max(Rational::from(x)).max(Rational::from(y));
        }
        m
    }

    pub fn to_svg(&self) -> String {
        let m = self.extent();
        let pad = &m / Rational::from(20i64);
        let side = &m + &pad + &pad;
        // World y grows upward; SVG y grows downward.
        let pt = |p: &Point| format!("{},{}", num(&p.x), num(&(&m - &p.y)));
        let origin = Point::new(Rational::zero(), Rational::zero());

        let mut s = String::new();
        writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{CANVAS}" height="{CANVAS}" viewBox="{} {} {} {}">"#,
            num(&-pad.clone()),
            num(&-pad),
            num(&side),
            num(&side)
        )
        .unwrap();
        let axis = |to: Point| {
            format!(
                r#"<line class="axis" x1="{}" y1="{}" x2="{}" y2="{}" stroke="black" stroke-width="1.5" vector-effect="non-scaling-stroke"/>"#,
                num(&origin.x),
                num(&m),
                num(&to.x),
                num(&(&m - &to.y))
            )
        };
        writeln!(s, "{}", axis(Point::new(m.clone(), Rational::zero()))).unwrap();
        writeln!(s, "{}", axis(Point::new(Rational::zero(), m.clone()))).unwrap();
        for (i, r) in self.regions.iter().enumerate() {
            let color = COLORS[i % COLORS.len()];
            let mut pts = vec![pt(&origin)];
            pts.extend(r.boundary().iter().map(pt));
            writeln!(
                s,
                r#"<polygon class="region {}" points="{}" fill="{color}" fill-opacity="0.15" stroke="{color}" stroke-width="2" vector-effect="non-scaling-stroke"/>"#,
                r.flavor(),
                pts.join(" ")
            )
            .unwrap();
        }
        if let Some(w) = self.witness {
            let pts: Vec<String> = w.points.iter().map(pt).collect();
            writeln!(
                s,
                r##"<polyline class="witness" points="{}" fill="none" stroke="#27ae60" stroke-width="2.5" vector-effect="non-scaling-stroke"/>"##,
                pts.join(" ")
            )
            .unwrap();
        }
        if let Some(g) = self.generator {
            let mut d = String::new();
            for (i, (x, y)) in g.vertices().into_iter().enumerate() {
                let p = Point::new(Rational::from(x), Rational::from(y));
                let cmd = if i == 0 { 'M' } else { 'L' };
                write!(d, "{}{cmd} {}", if i == 0 { "" } else { " " }, pt(&p).replace(',', " ")).unwrap();
            }
            writeln!(
                s,
                r#"<path class="generator" d="{d}" fill="none" stroke="black" stroke-width="2" stroke-dasharray="6 4" vector-effect="non-scaling-stroke"/>"#
            )
            .unwrap();
        }
        s.push_str("</svg>\n");
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Flavor;
    use crate::obstruct::witness_eta;

    #[test]
    fn witness_is_one_polyline() {
        let b1 = ToricRegion::ball(Rational::one()).unwrap();
        let b2 = ToricRegion::ball(Rational::from(2i64)).unwrap();
        let w = witness_eta(&b1, &b2, &Rational::new(1, 8)).unwrap();
        let svg = Scene { regions: vec![&b1, &b2], witness: Some(&w), generator: None }.to_svg();
        assert_eq!(svg.matches("<polyline").count(), 1);
        assert_eq!(svg.matches("<polygon").count(), 2);
        assert!(svg.contains(r#"width="800" height="800""#));
    }

    #[test]
    fn polydisk_chain_and_generator() {
        let p = ToricRegion::polydisk(Rational::from(8i64), Rational::from(2i64)).unwrap();
        let svg = Scene { regions: vec![&p], ..Default::default() }.to_svg();
        assert!(svg.contains(
            r#"points="0.000000,8.000000 8.000000,8.000000 8.000000,6.000000 0.000000,6.000000""#
        ));
        let b = ToricRegion::ball(Rational::one()).unwrap();
        let g = PathGenerator::parse(Flavor::Convex, "e:1,1x1").unwrap();
        let svg = Scene { regions: vec![&b], witness: None, generator: Some(&g) }.to_svg();
        assert!(svg.contains(r#"d="M 0.000000 0.000000 L 1.000000 1.000000""#), "{svg}");
    }
}
