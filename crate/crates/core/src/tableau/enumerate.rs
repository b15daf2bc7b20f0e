//! Exhaustive enumeration of semistandard and standard tableaux.

use super::{Partition, Tableau, TableauError};

/// Default bound on the number of tableaux produced.
pub const DEFAULT_CAP: usize = 1_000_000;

/// Semistandard tableaux of the given shape with content `n × d`, in
/// lexicographic order of their row-major entry sequences.
pub fn enumerate_ssyt(
    shape: &Partition,
    n: usize,
    d: usize,
    cap: usize,
) -> Result<Vec<Tableau>, TableauError> {
    if shape.size() != n * d {
        return Err(TableauError::ShapeContent {
            boxes: shape.size(),
            n,
            d,
        });
    }
    let cells: Vec<(usize, usize)> = shape
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(i, &len)| (0..len).map(move |j| (i, j)))
        .collect();
    let mut grid: Vec<Vec<u32>> = shape.parts().iter().map(|&l| vec![0; l]).collect();
    let mut counts = vec![0usize; n + 1];
    let mut out = Vec::new();
    fill_ssyt(&cells, 0, n, d, cap, &mut grid, &mut counts, &mut out)?;
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn fill_ssyt(
    cells: &[(usize, usize)],
    pos: usize,
    n: usize,
    d: usize,
    cap: usize,
    grid: &mut Vec<Vec<u32>>,
    counts: &mut Vec<usize>,
    out: &mut Vec<Tableau>,
) -> Result<(), TableauError> {
    if pos == cells.len() {
        if out.len() == cap {
            return Err(TableauError::CapExceeded { cap });
        }
        out.push(Tableau::unchecked(grid.clone(), n, d));
        return Ok(());
    }
    let (i, j) = cells[pos];
    let mut lo = 1u32;
    if j > 0 {
        lo = lo.max(grid[i][j - 1]);
    }
    if i > 0 {
        lo = lo.max(grid[i - 1][j] + 1);
    }
    let hi = n as u32;
    for v in lo..=hi {
        if counts[v as usize] == d {
            continue;
        }
        // the column below must still fit strictly larger values
        let below = grid.iter().skip(i + 1).filter(|r| r.len() > j).count() as u32;
        if v + below > hi {
            break;
        }
        grid[i][j] = v;
        counts[v as usize] += 1;
        fill_ssyt(cells, pos + 1, n, d, cap, grid, counts, out)?;
        counts[v as usize] -= 1;
    }
    grid[i][j] = 0;
    Ok(())
}

/// Standard tableaux of the given shape (content `N × 1`), in lexicographic
/// order of their row-major entry sequences.
pub fn enumerate_standard(shape: &Partition, cap: usize) -> Result<Vec<Tableau>, TableauError> {
    let total = shape.size();
    let mut grid: Vec<Vec<u32>> = shape.parts().iter().map(|&l| vec![0; l]).collect();
    let mut filled = vec![0usize; shape.len()];
    let mut out = Vec::new();
    place_standard(
        shape.parts(),
        1,
        total,
        cap,
        &mut grid,
        &mut filled,
        &mut out,
    )?;
    out.sort_by(|a, b| a.rows().cmp(b.rows()));
    Ok(out)
}

/// Places values in increasing order into addable corners.
fn place_standard(
    parts: &[usize],
    value: usize,
    total: usize,
    cap: usize,
    grid: &mut Vec<Vec<u32>>,
    filled: &mut Vec<usize>,
    out: &mut Vec<Tableau>,
) -> Result<(), TableauError> {
    if value > total {
        if out.len() == cap {
            return Err(TableauError::CapExceeded { cap });
        }
        out.push(Tableau::unchecked(grid.clone(), total, 1));
        return Ok(());
    }
    for i in 0..parts.len() {
        let j = filled[i];
        if j == parts[i] || (i > 0 && filled[i - 1] <= j) {
            continue;
        }
        grid[i][j] = value as u32;
        filled[i] += 1;
        place_standard(parts, value + 1, total, cap, grid, filled, out)?;
        filled[i] -= 1;
        grid[i][j] = 0;
    }
    Ok(())
}
