/// Counts of `4 x (n+1)` Boolean matrices whose columns each hold two ones.
/// The superscript names the row parities: `00` all rows even, `01` two
/// even and two odd, `11` all odd. The `b` family counts only the matrices
/// whose rows form two pairs of equal rows. Brindled quadruples are the
/// all-even matrices with four distinct rows, up to row order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuadrupleCensus {
    pub n: usize,
    pub a00: u128,
    pub a01: u128,
    pub a11: u128,
    pub b00: u128,
    pub b01: u128,
    pub b11: u128,
    pub w: u128,
}

/// Census via the parity recurrences on the number of columns.
pub fn census_recurrence(n: usize) -> QuadrupleCensus {
    // a01[k] for k = 0..=n
    let mut a01 = alloc::vec![0u128; n + 1];
    for k in 0..=n {
        a01[k] = match k {
            0 => 6,
            1 => 24,
            _ => 4 * a01[k - 1] + 12 * a01[k - 2],
        };
    }
    let a00 = if n == 0 { 0 } else { a01[n - 1] };
    let b01_even = |k: usize| 6 * 4u128.pow((k / 2) as u32);
    let (b00, b01, b11) = if n.is_multiple_of(2) {
        (0, b01_even(n), 0)
    } else {
        (b01_even(n - 1), 0, b01_even(n - 1))
    };
    QuadrupleCensus {
        n,
        a00,
        a01: a01[n],
        a11: a00,
        b00,
        b01,
        b11,
        w: (a00 - b00) / 24,
    }
}

/// Closed-form number of brindled quadruples in the `(n+1)`-cube.
pub fn brindled_count_closed(n: usize) -> u128 {
    let n = n as u32;
    let six = 6u128.pow(n);
    let two = 2u128.pow(n);
    if n.is_multiple_of(2) {
        (six - two) / 32
    } else {
        (six - 3 * two) / 32
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semilinear::enumerate_brindled;

    /// Oracle: walk all `6^(n+1)` matrices with two ones per column.
    fn brute_force(n: usize) -> QuadrupleCensus {
        const COLUMNS: [[u8; 4]; 6] = [
            [1, 1, 0, 0],
            [1, 0, 1, 0],
            [1, 0, 0, 1],
            [0, 1, 1, 0],
            [0, 1, 0, 1],
            [0, 0, 1, 1],
        ];
        let cols = n + 1;
        let mut c = QuadrupleCensus {
            n,
            a00: 0,
            a01: 0,
            a11: 0,
            b00: 0,
            b01: 0,
            b11: 0,
            w: 0,
        };
        let mut choice = vec![0usize; cols];
        loop {
            let mut rows = [0u32; 4];
            for &ch in &choice {
                for (row, &bit) in rows.iter_mut().zip(&COLUMNS[ch]) {
                    *row = *row << 1 | bit as u32;
                }
            }
            let odd = rows.iter().filter(|r| r.count_ones() % 2 == 1).count();
            let mut sorted = rows;
            sorted.sort_unstable();
            let paired = sorted[0] == sorted[1] && sorted[2] == sorted[3];
            let distinct = sorted.windows(2).all(|w| w[0] != w[1]);
            match odd {
                0 => {
                    c.a00 += 1;
                    c.b00 += paired as u128;
                    c.w += distinct as u128;
                }
                2 => {
                    c.a01 += 1;
                    c.b01 += paired as u128;
                }
                _ => {
                    c.a11 += 1;
                    c.b11 += paired as u128;
                }
            }
            let mut k = cols;
            loop {
                if k == 0 {
                    c.w /= 24;
                    return c;
                }
                k -= 1;
                choice[k] += 1;
                if choice[k] < 6 {
                    break;
                }
                choice[k] = 0;
            }
        }
    }

    #[test]
    fn recurrence_matches_matrix_oracle() {
        for n in 0..=6 {
            assert_eq!(census_recurrence(n), brute_force(n), "n = {n}");
        }
    }

    #[test]
    fn three_ways_to_count_brindled() {
        let expected = [0u128, 0, 1, 6, 40, 240, 1456];
        for (n, &want) in expected.iter().enumerate().skip(1) {
            assert_eq!(brindled_count_closed(n), want);
            assert_eq!(census_recurrence(n).w, want);
            assert_eq!(enumerate_brindled(n).count() as u128, want);
        }
    }

    #[test]
    fn base_values() {
        assert_eq!(census_recurrence(1).a01, 24);
        assert_eq!(census_recurrence(2).a00, 24);
        assert_eq!(census_recurrence(2).b00, 0);
        assert_eq!(census_recurrence(4).b01, 6 * 16);
    }
}
