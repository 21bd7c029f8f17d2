use super::graph::MosGraph;
use super::MosError;

/// Pearson correlation coefficient of two equally long samples.
pub fn pearson(x: &[f64], y: &[f64]) -> Result<f64, MosError> {
    if x.len() != y.len() {
        return Err(MosError::LengthMismatch(x.len(), y.len()));
    }
    if x.len() < 2 {
        return Err(MosError::LengthMismatch(x.len(), 2));
    }
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (a, b) in x.iter().zip(y) {
        let dx = a - mx;
        let dy = b - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if sxx == 0.0 || syy == 0.0 {
        return Err(MosError::DegenerateInput);
    }
    Ok((sxy / (sxx.sqrt() * syy.sqrt())).clamp(-1.0, 1.0))
}

/// Pairwise objective correlations over a set of edges.
///
/// `None` marks an undefined entry (an objective with zero variance).
#[derive(Clone, Debug, PartialEq)]
pub struct CorrelationMatrix {
    pub names: Vec<String>,
    pub edge_count: usize,
    entries: Vec<Option<f64>>,
}

impl CorrelationMatrix {
    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn get(&self, i: usize, j: usize) -> Option<f64> {
        self.entries[i * self.dim() + j]
    }

    /// Off-diagonal entries `(i, j, ρ)` with `i < j`.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize, Option<f64>)> + '_ {
        let d = self.dim();
        (0..d).flat_map(move |i| (i + 1..d).map(move |j| (i, j, self.get(i, j))))
    }
}

/// ρ over every edge of `graph`.
pub fn objective_correlation_matrix(graph: &MosGraph) -> Result<CorrelationMatrix, MosError> {
    correlation_matrix_where(graph, |_| true)
}

/// ρ over the edges whose cost vector satisfies `keep`.
pub fn correlation_matrix_where(
    graph: &MosGraph,
    keep: impl Fn(&[u64]) -> bool,
) -> Result<CorrelationMatrix, MosError> {
    let d = graph.dim();
    let mut columns: Vec<Vec<f64>> = vec![Vec::new(); d];
    for e in graph.edges() {
        if keep(e.cost) {
            for (col, &c) in columns.iter_mut().zip(e.cost) {
                col.push(c as f64);
            }
        }
    }
    let m = columns[0].len();
    if m < 2 {
        return Err(MosError::EmptyGraph);
    }
    let mut entries = vec![None; d * d];
    for i in 0..d {
        for j in i..d {
            let r = pearson(&columns[i], &columns[j]).ok();
            let r = if i == j { r.map(|_| 1.0) } else { r };
            entries[i * d + j] = r;
            entries[j * d + i] = r;
        }
    }
    Ok(CorrelationMatrix {
        names: graph.objectives().iter().map(|o| o.name.clone()).collect(),
        edge_count: m,
        entries,
    })
}
