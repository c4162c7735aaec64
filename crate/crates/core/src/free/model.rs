use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("model has no `domain:` line")]
    MissingDomain,
    #[error("line {line}: `domain:` given more than once")]
    DuplicateDomain { line: usize },
    #[error("the domain is empty")]
    EmptyDomain,
    #[error("individual `{name}` listed twice in the domain")]
    DuplicateIndividual { name: String },
    #[error("unknown individual `{name}`")]
    UnknownIndividual { name: String },
    #[error("predicate `{name}/{arity}`: tuple has {found} individual(s)")]
    Arity {
        name: String,
        arity: usize,
        found: usize,
    },
    #[error("predicate `{name}/{arity}` declared twice")]
    DuplicatePredicate { name: String, arity: usize },
    #[error("predicate `{name}` must have arity at least 1")]
    ZeroArity { name: String },
}

impl ModelError {
    fn at(self, line: usize) -> ModelError {
        match self {
            ModelError::Syntax { .. } | ModelError::DuplicateDomain { .. } => self,
            other => ModelError::Syntax {
                line,
                message: other.to_string(),
            },
        }
    }
}

/// A finite, nonempty first-order structure.
///
/// Domain order matters: `eps` picks the first satisfier in this order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Model {
    domain: Vec<String>,
    index: HashMap<String, usize>,
    predicates: BTreeMap<(String, usize), BTreeSet<Vec<usize>>>,
}

impl Model {
    pub fn new<S: AsRef<str>>(domain: &[S]) -> Result<Self, ModelError> {
        if domain.is_empty() {
            return Err(ModelError::EmptyDomain);
        }
        let mut index = HashMap::new();
        for (i, d) in domain.iter().enumerate() {
            let name = d.as_ref().to_string();
            if index.insert(name.clone(), i).is_some() {
                return Err(ModelError::DuplicateIndividual { name });
            }
        }
        Ok(Model {
            domain: domain.iter().map(|d| d.as_ref().to_string()).collect(),
            index,
            predicates: BTreeMap::new(),
        })
    }

    /// Declares `name/arity` with the given extension.
    pub fn add_predicate<T, S>(
        &mut self,
        name: &str,
        arity: usize,
        tuples: &[T],
    ) -> Result<(), ModelError>
    where
        T: AsRef<[S]>,
        S: AsRef<str>,
    {
        if arity == 0 {
            return Err(ModelError::ZeroArity { name: name.into() });
        }
        let key = (name.to_string(), arity);
        if self.predicates.contains_key(&key) {
            return Err(ModelError::DuplicatePredicate {
                name: name.into(),
                arity,
            });
        }
        let mut extension = BTreeSet::new();
        for tuple in tuples {
            let tuple = tuple.as_ref();
            if tuple.len() != arity {
                return Err(ModelError::Arity {
                    name: name.into(),
                    arity,
                    found: tuple.len(),
                });
            }
            let ids = tuple
                .iter()
                .map(|d| self.individual(d.as_ref()))
                .collect::<Result<Vec<_>, _>>()?;
            extension.insert(ids);
        }
        self.predicates.insert(key, extension);
        Ok(())
    }

    pub fn domain(&self) -> &[String] {
        &self.domain
    }

    pub fn has_predicate(&self, name: &str, arity: usize) -> bool {
        self.predicates.contains_key(&(name.to_string(), arity))
    }

    /// Declared predicates as `(name, arity)` pairs.
    pub fn signature(&self) -> impl Iterator<Item = (&str, usize)> {
        self.predicates.keys().map(|(n, a)| (n.as_str(), *a))
    }

    pub(crate) fn individual(&self, name: &str) -> Result<usize, ModelError> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| ModelError::UnknownIndividual { name: name.into() })
    }

    pub(crate) fn holds(&self, name: &str, args: &[usize]) -> bool {
        self.predicates
            .get(&(name.to_string(), args.len()))
            .is_some_and(|ext| ext.contains(args))
    }
}

/// Model file format:
///
/// ```text
/// # comment
/// domain: a b c
/// pred man/1: a b
/// pred loves/2: a,b b,a
/// ```
impl FromStr for Model {
    type Err = ModelError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut domain: Option<(usize, Vec<&str>)> = None;
        let mut preds = Vec::new();
        for (i, raw) in s.lines().enumerate() {
            let line = i + 1;
            let body = raw.trim();
            if body.is_empty() || body.starts_with('#') {
                continue;
            }
            let syntax = |message: &str| ModelError::Syntax {
                line,
                message: message.into(),
            };
            if let Some(rest) = body.strip_prefix("domain:") {
                if domain.is_some() {
                    return Err(ModelError::DuplicateDomain { line });
                }
                domain = Some((line, rest.split_whitespace().collect()));
            } else if let Some(rest) = body.strip_prefix("pred ") {
                let (head, ext) = rest
                    .split_once(':')
                    .ok_or_else(|| syntax("expected `:` after predicate name"))?;
                let (name, arity) = head
                    .trim()
                    .split_once('/')
                    .ok_or_else(|| syntax("expected `name/arity`"))?;
                let valid = |c: char| c.is_alphanumeric() || c == '_';
                if name.is_empty() || !name.chars().all(valid) {
                    return Err(syntax(&format!("invalid predicate name `{name}`")));
                }
                let arity: usize = arity
                    .parse()
                    .map_err(|_| syntax(&format!("invalid arity `{arity}`")))?;
                let tuples: Vec<Vec<&str>> = ext
                    .split_whitespace()
                    .map(|t| t.split(',').collect())
                    .collect();
                preds.push((line, name, arity, tuples));
            } else {
                return Err(syntax("expected `domain:` or `pred`"));
            }
        }
        let (domain_line, names) = domain.ok_or(ModelError::MissingDomain)?;
        let mut model = Model::new(&names).map_err(|e| e.at(domain_line))?;
        for (line, name, arity, tuples) in preds {
            model
                .add_predicate(name, arity, &tuples)
                .map_err(|e| e.at(line))?;
        }
        Ok(model)
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "domain: {}", self.domain.join(" "))?;
        for ((name, arity), ext) in &self.predicates {
            write!(f, "pred {name}/{arity}:")?;
            for tuple in ext {
                let names: Vec<&str> = tuple.iter().map(|&i| self.domain[i].as_str()).collect();
                write!(f, " {}", names.join(","))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
