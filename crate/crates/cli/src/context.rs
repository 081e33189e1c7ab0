//! Group contexts: a parser for elements plus an order oracle, behind one
//! word-level interface.

use std::cmp::Ordering;
use std::sync::Arc;

use biorder::bundle::{bundle_element, bundle_order, BundleGroup, MonodromySpec};
use biorder::free_order::MagnusOrder;
use biorder::klein::{klein_normal_form, klein_order};
use biorder::lattice::{levitt_check, IndexOrder, IntMatrix2, Point};
use biorder::laws::{check_law, Law};
use biorder::order::{Decision, Group, Invariance, LatticeOrder, OrderOracle};
use biorder::random::Alphabet;
use biorder::surface::{nf_of_word, surf3p2_order};
use biorder::word::{Gen, Word};
use biorder::{analyze_monodromy, figure_eight_preset, MonodromyVerdict};

use crate::CliError;

type Convert<E> = Box<dyn Fn(&Word) -> Result<E, String> + Send + Sync>;
type Endo<E> = Box<dyn Fn(&E) -> E + Send + Sync>;

/// The operations the commands need, independent of the element type.
trait WordOracle: Send + Sync {
    fn validate(&self, w: &Word) -> Result<(), String>;
    fn compare(&self, u: &Word, v: &Word) -> Result<(Ordering, Decision), CliError>;
    fn law(&self, law: Law, t: &[Word; 3]) -> Result<Option<String>, CliError>;
    fn invariance(&self) -> Invariance;
    fn has_endo(&self) -> bool;
}

struct Bound<O: OrderOracle> {
    order: O,
    convert: Convert<O::Elem>,
    endo: Option<Endo<O::Elem>>,
}

impl<O> Bound<O>
where
    O: OrderOracle,
{
    fn elem(&self, w: &Word) -> Result<O::Elem, CliError> {
        (self.convert)(w).map_err(CliError::Parse)
    }
}

impl<O> WordOracle for Bound<O>
where
    O: OrderOracle + Send + Sync,
    O::Elem: PartialEq,
{
    fn validate(&self, w: &Word) -> Result<(), String> {
        (self.convert)(w).map(drop)
    }

    fn compare(&self, u: &Word, v: &Word) -> Result<(Ordering, Decision), CliError> {
        let (u, v) = (self.elem(u)?, self.elem(v)?);
        Ok(self.order.compare_explained(&u, &v)?)
    }

    fn law(&self, law: Law, [a, b, c]: &[Word; 3]) -> Result<Option<String>, CliError> {
        let t = [self.elem(a)?, self.elem(b)?, self.elem(c)?];
        let endo = self
            .endo
            .as_ref()
            .map(|f| f as &dyn Fn(&O::Elem) -> O::Elem);
        Ok(check_law(&self.order, law, &t, endo)?)
    }

    fn invariance(&self) -> Invariance {
        self.order.invariance()
    }

    fn has_endo(&self) -> bool {
        self.endo.is_some()
    }
}

/// Which group, as named on the command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Selector {
    Free2Lex,
    FreeIndexedLex,
    Z2Lex,
    Z2Eigen(IntMatrix2),
    Klein,
    Surf3P2,
    Bundle(MonodromySpec),
}

impl Selector {
    /// `group` is the `--group` value; `matrix` and `monodromy` are the
    /// optional companion flags.
    pub fn resolve(
        group: &str,
        matrix: Option<&str>,
        monodromy: Option<&str>,
    ) -> Result<Selector, CliError> {
        Ok(match group {
            "free2-lex" => Selector::Free2Lex,
            "free-indexed-lex" => Selector::FreeIndexedLex,
            "z2-lex" => Selector::Z2Lex,
            "z2-eigen" => {
                let m = matrix
                    .ok_or_else(|| CliError::Parse("z2-eigen needs --matrix \"a,b;c,d\"".into()))?;
                Selector::Z2Eigen(parse_matrix(m)?)
            }
            "klein" => Selector::Klein,
            "surf3p2" => Selector::Surf3P2,
            "bundle:figure8" => Selector::Bundle(figure_eight_preset()),
            "bundle" => {
                let spec = monodromy.ok_or_else(|| {
                    CliError::Parse(
                        "bundle needs --monodromy \"φ(a);φ(b);φ⁻¹(a);φ⁻¹(b)\" or use bundle:figure8"
                            .into(),
                    )
                })?;
                Selector::Bundle(parse_monodromy(spec)?)
            }
            other => {
                return Err(CliError::Parse(format!(
                    "unknown group `{other}` (expected free2-lex, free-indexed-lex, z2-lex, \
                     z2-eigen, klein, surf3p2, bundle, bundle:figure8)"
                )))
            }
        })
    }
}

pub fn parse_matrix(s: &str) -> Result<IntMatrix2, CliError> {
    s.parse::<IntMatrix2>()
        .map_err(|e| CliError::Parse(e.to_string()))
}

fn parse_monodromy(s: &str) -> Result<MonodromySpec, CliError> {
    let parts: Vec<&str> = s.split(';').map(str::trim).collect();
    let images: [&str; 4] = parts
        .try_into()
        .map_err(|_| CliError::Parse("--monodromy takes four words separated by `;`".into()))?;
    MonodromySpec::from_images(images).map_err(|e| CliError::Parse(format!("bad monodromy: {e}")))
}

const A: Gen = Gen::named('a');
const B: Gen = Gen::named('b');
const T: Gen = Gen::named('t');

fn only_letters(w: &Word, allowed: &[Gen]) -> Result<(), String> {
    match w.generators().into_iter().find(|g| !allowed.contains(g)) {
        Some(g) => Err(format!("generator {g} is not in this group")),
        None => Ok(()),
    }
}

fn abelian(w: &Word) -> Result<Point, String> {
    only_letters(w, &[A, B])?;
    Ok(Point {
        x: w.exponent_sum(A),
        y: w.exponent_sum(B),
    })
}

/// A bound group context.
pub struct Context {
    selector: Selector,
    oracle: Arc<dyn WordOracle>,
}

impl Context {
    pub fn new(selector: Selector) -> Result<Context, CliError> {
        let oracle: Arc<dyn WordOracle> = match &selector {
            Selector::Free2Lex => Arc::new(Bound {
                order: MagnusOrder::finite(vec![A, B], IndexOrder::Lex),
                convert: Box::new(|w: &Word| only_letters(w, &[A, B]).map(|_| w.clone())),
                endo: None,
            }),
            Selector::FreeIndexedLex => Arc::new(Bound {
                order: MagnusOrder::indexed(IndexOrder::Lex),
                convert: Box::new(|w: &Word| {
                    match w.generators().into_iter().find(|g| g.index().is_none()) {
                        Some(g) => Err(format!("generator {g} is not of the form x[i,j]")),
                        None => Ok(w.clone()),
                    }
                }),
                // translating every index preserves the lex Magnus order
                endo: Some(Box::new(|w: &Word| {
                    w.map_gens(|g| {
                        let (i, j) = g.index().expect("validated");
                        Gen::indexed(g.name(), i + 1, j + 1)
                    })
                })),
            }),
            Selector::Z2Lex => Arc::new(Bound {
                order: LatticeOrder(IndexOrder::Lex),
                convert: Box::new(abelian),
                endo: None,
            }),
            Selector::Z2Eigen(m) => {
                let report = levitt_check(m).map_err(|e| CliError::Parse(e.to_string()))?;
                let order = report.order.ok_or_else(|| {
                    CliError::Precondition(format!(
                        "matrix {m} preserves no bi-ordering of Z² ({})",
                        report.classification
                    ))
                })?;
                let m = m.clone();
                Arc::new(Bound {
                    order: LatticeOrder(order),
                    convert: Box::new(abelian),
                    endo: Some(Box::new(move |p: &Point| m.apply(p))),
                })
            }
            Selector::Klein => Arc::new(Bound {
                order: klein_order(),
                convert: Box::new(|w: &Word| klein_normal_form(w).map_err(|e| e.to_string())),
                endo: None,
            }),
            Selector::Surf3P2 => Arc::new(Bound {
                order: surf3p2_order(),
                convert: Box::new(|w: &Word| nf_of_word(w).map_err(|e| e.to_string())),
                endo: None,
            }),
            Selector::Bundle(spec) => {
                let report = analyze_monodromy(spec);
                if report.verdict != MonodromyVerdict::BiOrderable {
                    return Err(CliError::Precondition(format!(
                        "monodromy with matrix {} is not certified: {}",
                        spec.matrix(),
                        report.verdict
                    )));
                }
                let order =
                    bundle_order(spec).map_err(|e| CliError::Precondition(e.to_string()))?;
                let conv = spec.clone();
                let group = BundleGroup::new(spec.clone());
                let t = bundle_element(&Word::gen(T), spec).expect("t is an element");
                let t_inv = group.invert(&t);
                Arc::new(Bound {
                    order,
                    convert: Box::new(move |w: &Word| {
                        only_letters(w, &[A, B, T])?;
                        bundle_element(w, &conv).map_err(|e| e.to_string())
                    }),
                    // conjugation by t acts as φ on the fiber
                    endo: Some(Box::new(move |e| {
                        group.multiply(&group.multiply(&t, e), &t_inv)
                    })),
                })
            }
        };
        Ok(Context { selector, oracle })
    }

    pub fn selector(&self) -> &Selector {
        &self.selector
    }

    pub fn name(&self) -> &'static str {
        match self.selector {
            Selector::Free2Lex => "free2-lex",
            Selector::FreeIndexedLex => "free-indexed-lex",
            Selector::Z2Lex => "z2-lex",
            Selector::Z2Eigen(_) => "z2-eigen",
            Selector::Klein => "klein",
            Selector::Surf3P2 => "surf3p2",
            Selector::Bundle(_) => "bundle",
        }
    }

    /// Letters used when sampling random elements.
    pub fn alphabet(&self) -> Alphabet {
        match self.selector {
            Selector::Free2Lex | Selector::Z2Lex | Selector::Z2Eigen(_) => Alphabet::letters("ab"),
            Selector::FreeIndexedLex => Alphabet::Indexed { bound: 3 },
            Selector::Klein => Alphabet::letters("xy"),
            Selector::Surf3P2 => Alphabet::letters("abc"),
            Selector::Bundle(_) => Alphabet::letters("abt"),
        }
    }

    /// Parses an element. `free2-lex` also accepts `x[0,0]`, `x[1,0]` for
    /// `a`, `b`, and the `z2-*` contexts accept `(x,y)`.
    pub fn parse(&self, s: &str) -> Result<Word, CliError> {
        let s = s.trim();
        let w = match self.selector {
            Selector::Z2Lex | Selector::Z2Eigen(_) if s.starts_with('(') => parse_point(s)?,
            _ => s
                .parse::<Word>()
                .map_err(|e| CliError::Parse(format!("`{s}`: {e}")))?,
        };
        let w = match self.selector {
            Selector::Free2Lex => w.map_gens(|g| match g.index() {
                Some((0, 0)) if g.name() == 'x' => A,
                Some((1, 0)) if g.name() == 'x' => B,
                _ => g,
            }),
            _ => w,
        };
        self.oracle
            .validate(&w)
            .map_err(|e| CliError::Parse(format!("`{s}`: {e}")))?;
        Ok(w)
    }

    pub fn compare(&self, u: &Word, v: &Word) -> Result<(Ordering, Decision), CliError> {
        self.oracle.compare(u, v)
    }

    pub fn check(&self, law: Law, t: &[Word; 3]) -> Result<Option<String>, CliError> {
        self.oracle.law(law, t)
    }

    pub fn invariance(&self) -> Invariance {
        self.oracle.invariance()
    }

    pub fn has_endo(&self) -> bool {
        self.oracle.has_endo()
    }

    /// Laws checked when none are requested.
    pub fn default_laws(&self) -> Vec<Law> {
        Law::ALL
            .into_iter()
            .filter(|l| !l.needs_bi() || self.invariance() == Invariance::Bi)
            .filter(|l| *l != Law::EndoInv || self.has_endo())
            .collect()
    }
}

fn parse_point(s: &str) -> Result<Word, CliError> {
    let bad = || CliError::Parse(format!("`{s}`: expected a lattice point `(x,y)`"));
    let inner = s
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(bad)?;
    let (x, y) = inner.split_once(',').ok_or_else(bad)?;
    let x: i64 = x.trim().parse().map_err(|_| bad())?;
    let y: i64 = y.trim().parse().map_err(|_| bad())?;
    Ok(Word::reduce([(A, x), (B, y)]))
}
