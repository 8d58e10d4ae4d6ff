//! Session texts for the worked examples, addressed by id: `EX1`, `EX2`, `EX3(n)`,
//! `EX4(n)`, `EX5`, `EX6`.

use std::fmt::Write;

pub const EX1: &str = "\
# seven vertices, one commutativity relation; T has ann T = <gamma>
vertices: 1 2 3 4 5 6 7
arrow delta: 3 -> 1
arrow epsilon: 3 -> 2
arrow gamma: 4 -> 3
arrow alpha: 5 -> 4
arrow beta: 6 -> 4
arrow theta: 7 -> 5
arrow omega: 7 -> 6
relation alpha*gamma
relation beta*gamma
relation gamma*delta
relation theta*alpha - omega*beta
module X1 = string theta^-1/omega
module X2 = string epsilon
module X3 = string delta
module X4 = string omega
module T = S(6) + X1 + S(3) + X2 + X3 + P(7) + X4
";

pub const EX2: &str = "\
# gldim 3, but End(T) has infinite global dimension
vertices: 1 2 3 4
arrow alpha: 1 -> 2
arrow beta: 2 -> 1
arrow theta: 2 -> 3
arrow lambda: 4 -> 2
arrow omega: 4 -> 3
relation lambda*theta
relation alpha*beta
relation lambda*beta*alpha
module U1 = string alpha/theta/omega^-1/lambda/beta
module U2 = string alpha/lambda^-1/omega
module T = P(1) + U1 + P(4) + U2
";

pub const EX5: &str = "\
# not special biserial; ann T = <delta, gamma*lambda, epsilon*mu>
vertices: 1 2 3 4 5 6 7
arrow alpha: 1 -> 2
arrow beta: 1 -> 3
arrow gamma: 2 -> 4
arrow delta: 3 -> 5
arrow lambda: 4 -> 5
arrow epsilon: 5 -> 6
arrow mu: 6 -> 7
relation alpha*gamma*lambda - beta*delta
relation lambda*epsilon*mu
module T1 = rep dims {1: 1, 2: 1, 4: 1} maps {alpha: [[1]], gamma: [[1]]}
module T2 = rep dims {4: 1, 5: 1, 6: 1} maps {lambda: [[1]], epsilon: [[1]]}
module T3 = rep dims {6: 1, 7: 1} maps {mu: [[1]]}
module T4 = rep dims {1: 1, 3: 1} maps {beta: [[1]]}
module T = T1 + T2 + T3 + T4 + S(7) + S(4) + S(1)
";

pub const EX6: &str = "\
# special biserial of gldim 2 whose quotient A/ann T has gldim 4
vertices: 1 2 3 4 5 6 7
arrow delta: 7 -> 2
arrow alpha: 1 -> 2
arrow beta: 1 -> 4
arrow gamma: 2 -> 3
arrow lambda: 3 -> 5
arrow mu: 4 -> 5
arrow epsilon: 5 -> 6
relation delta*gamma
relation lambda*epsilon
relation alpha*gamma*lambda - beta*mu
module X1 = string alpha/gamma
module X2 = string beta
module X3 = string lambda
module X4 = string epsilon
module X5 = string alpha/delta^-1
module T = S(1) + S(6) + X1 + X2 + X3 + X4 + X5
";

/// The four-vertex algebra of `EX2` with a tail `a_k -> ... -> a_1 -> 4` of `n - 3`
/// extra vertices; every composition of two tail arrows vanishes, as does `mu1*lambda`.
pub fn ex3(n: usize) -> Option<String> {
    if n < 3 {
        return None;
    }
    let k = n - 3;
    let mut s = format!("# family with gldim {n}; End(T) has infinite global dimension\nvertices: 1 2 3 4");
    for i in 1..=k {
        write!(s, " a{i}").unwrap();
    }
    s.push_str(
        "\narrow alpha: 1 -> 2\narrow beta: 2 -> 1\narrow theta: 2 -> 3\narrow lambda: 4 -> 2\narrow omega: 4 -> 3\n",
    );
    for i in 1..=k {
        let target = if i == 1 { "4".to_string() } else { format!("a{}", i - 1) };
        writeln!(s, "arrow mu{i}: a{i} -> {target}").unwrap();
    }
    s.push_str("relation lambda*theta\nrelation alpha*beta\nrelation lambda*beta*alpha\n");
    if k >= 1 {
        s.push_str("relation mu1*lambda\n");
    }
    for i in 2..=k {
        writeln!(s, "relation mu{i}*mu{}", i - 1).unwrap();
    }
    s.push_str("module U1 = string alpha/theta/omega^-1/lambda/beta\nmodule U2 = string alpha/lambda^-1/omega\n");
    s.push_str("module T = ");
    for i in 1..=k {
        write!(s, "P(a{i}) + ").unwrap();
    }
    s.push_str("U1 + U2 + P(1) + P(4)\n");
    Some(s)
}

/// Monomial algebra on `1 -> 2 -> ... -> n+1` with arms `a_i -> i`, `i < n`, and
/// relations `gamma_i alpha_i alpha_{i+1}`.
pub fn ex4(n: usize) -> Option<String> {
    if n < 2 {
        return None;
    }
    let mut s = format!("# monomial family of gldim 2; End(T) has gldim {}\nvertices:", n + 1);
    for i in 1..=n + 1 {
        write!(s, " {i}").unwrap();
    }
    for i in 1..n {
        write!(s, " a{i}").unwrap();
    }
    s.push('\n');
    for i in 1..=n {
        writeln!(s, "arrow alpha{i}: {i} -> {}", i + 1).unwrap();
    }
    for i in 1..n {
        writeln!(s, "arrow gamma{i}: a{i} -> {i}").unwrap();
    }
    for i in 1..n {
        writeln!(s, "relation gamma{i}*alpha{i}*alpha{}", i + 1).unwrap();
    }
    for j in 1..n {
        if j + 1 < n {
            writeln!(s, "module Ta{j} = string gamma{j}/alpha{j}/gamma{}^-1", j + 1).unwrap();
        } else {
            writeln!(s, "module Ta{j} = string gamma{j}/alpha{j}").unwrap();
        }
    }
    s.push_str("module T = ");
    for j in 1..n {
        write!(s, "Ta{j} + S(a{j}) + ").unwrap();
    }
    writeln!(s, "P({n}) + P({})", n + 1).unwrap();
    Some(s)
}

/// The presentation stated for `End(T)` in the monomial family: a chain
/// `1 -> ... -> n+1` with arms `b_j -> j` and relations `beta_i beta_{i+1}`.
pub fn ex4_stated_endo(n: usize) -> String {
    let mut s = String::from("vertices:");
    for i in 1..=n + 1 {
        write!(s, " {i}").unwrap();
    }
    for j in 1..n {
        write!(s, " b{j}").unwrap();
    }
    s.push('\n');
    for i in 1..=n {
        writeln!(s, "arrow beta{i}: {i} -> {}", i + 1).unwrap();
    }
    for j in 1..n {
        writeln!(s, "arrow arm{j}: b{j} -> {j}").unwrap();
    }
    for i in 1..n {
        writeln!(s, "relation beta{i}*beta{}", i + 1).unwrap();
    }
    s
}

/// Parses `EX3(5)` style ids into the family name and parameter.
fn split_id(id: &str) -> Option<(&str, Option<usize>)> {
    let id = id.trim();
    match id.split_once('(') {
        Some((name, rest)) => {
            let n = rest.strip_suffix(')')?.trim().parse().ok()?;
            Some((name, Some(n)))
        }
        None => Some((id, None)),
    }
}

/// Session text for a case id, if the id names one.
pub fn session_text(id: &str) -> Option<String> {
    let (name, n) = split_id(id)?;
    match (name.to_ascii_uppercase().as_str(), n) {
        ("EX1", None) => Some(EX1.to_string()),
        ("EX2", None) => Some(EX2.to_string()),
        ("EX5", None) => Some(EX5.to_string()),
        ("EX6", None) => Some(EX6.to_string()),
        ("EX3", Some(n)) => ex3(n),
        ("EX4", Some(n)) => ex4(n),
        _ => None,
    }
}

/// The ids run by the full suite.
pub fn default_ids() -> Vec<String> {
    let mut ids = vec!["EX1".to_string(), "EX2".to_string()];
    ids.extend((3..=6).map(|n| format!("EX3({n})")));
    ids.extend((4..=7).map(|n| format!("EX4({n})")));
    ids.push("EX5".into());
    ids.push("EX6".into());
    ids
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::session::parse_session;

    #[test]
    fn every_default_case_parses_with_a_full_module() {
        for id in default_ids() {
            let s = parse_session(&session_text(&id).unwrap()).unwrap();
            assert_eq!(s.default_module().unwrap().summands.len(), s.algebra.vertex_count(), "{id}");
        }
    }

    #[test]
    fn family_parameters_are_bounded() {
        assert!(ex3(2).is_none() && ex3(3).is_some());
        assert!(ex4(1).is_none() && ex4(2).is_some());
        assert!(session_text("EX3").is_none());
    }
}
