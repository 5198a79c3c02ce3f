//! Partitions of `n` into exactly `m` parts.

/// Iterator over the partitions of `n` into exactly `parts` parts, each
/// yielded as a non-increasing vector, in colexicographic order
/// (Knuth's Algorithm H).
pub struct PartitionsIntoParts {
    a: Vec<i64>,
    m: usize,
    state: State,
}

enum State {
    Fresh,
    Running,
    Done,
}

impl PartitionsIntoParts {
    pub fn new(n: usize, parts: usize) -> Self {
        let m = parts;
        let (a, state) = if m > n || (m == 0 && n > 0) {
            (Vec::new(), State::Done)
        } else if m <= 1 {
            (vec![n as i64], State::Fresh)
        } else {
            // a[0] is unused so the indices match the 1-based algorithm
            let mut a = vec![0i64; m + 2];
            a[1] = (n - m + 1) as i64;
            for x in a.iter_mut().take(m + 1).skip(2) {
                *x = 1;
            }
            a[m + 1] = -1;
            (a, State::Fresh)
        };
        PartitionsIntoParts { a, m, state }
    }

    fn current(&self) -> Vec<usize> {
        if self.m == 0 {
            return Vec::new();
        }
        if self.m == 1 {
            return vec![self.a[0] as usize];
        }
        self.a[1..=self.m].iter().map(|&x| x as usize).collect()
    }

    fn advance(&mut self) -> bool {
        if self.m <= 1 {
            return false;
        }
        let a = &mut self.a;
        let m = self.m;
        if a[2] < a[1] - 1 {
            a[1] -= 1;
            a[2] += 1;
            return true;
        }
        let mut j = 3;
        let mut s = a[1] + a[2] - 1;
        while a[j] >= a[1] - 1 {
            s += a[j];
            j += 1;
        }
        if j > m {
            return false;
        }
        let x = a[j] + 1;
        a[j] = x;
        j -= 1;
        while j > 1 {
            a[j] = x;
            s -= x;
            j -= 1;
        }
        a[1] = s;
        true
    }
}

impl Iterator for PartitionsIntoParts {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        match self.state {
            State::Done => None,
            State::Fresh => {
                self.state = State::Running;
                Some(self.current())
            }
            State::Running => {
                if self.advance() {
                    Some(self.current())
                } else {
                    self.state = State::Done;
                    None
                }
            }
        }
    }
}

/// Multiplicities `k_1, …, k_n` of a partition of `n` (index 0 unused).
pub fn multiplicities(partition: &[usize], n: usize) -> Vec<usize> {
    let mut k = vec![0; n + 1];
    for &part in partition {
        k[part] += 1;
    }
    k
}
