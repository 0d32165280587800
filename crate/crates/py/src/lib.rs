//! Python module `tokompiler`: tokenize, restore, vocabularies and the BPE
//! baseline.

use std::path::PathBuf;

use pyo3::exceptions::{PyOSError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyBytes;

use tokompiler::anonymizer::{self, AnonymizerConfig, ChangeDictionary, Scope, DEFAULT_SEED};
use tokompiler::bpe::{self, BpeModel, DEFAULT_SAMPLE_FRACTION, DEFAULT_TARGET_SIZE};
use tokompiler::corpus::{self, FilterConfig, LanguageMap};
use tokompiler::lexicalizer::{self, TokenStream};
use tokompiler::pipeline::TokenizedUnit;
use tokompiler::vocabulary::{VocabConfig, Vocabulary};
use tokompiler::{Language, Pipeline, SourceUnit};

fn py_err(e: tokompiler::Error) -> PyErr {
    match e {
        tokompiler::Error::Io { .. } | tokompiler::Error::RootNotFound(_) => PyOSError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

/// Parses and anonymizes source text.
#[pyclass(name = "Tokenizer", module = "tokompiler", frozen)]
struct PyTokenizer {
    inner: Pipeline,
}

#[pymethods]
impl PyTokenizer {
    #[new]
    #[pyo3(signature = (seed = DEFAULT_SEED, scope = "file", range_lo = 1, range_hi = 1000))]
    fn new(seed: u64, scope: &str, range_lo: u64, range_hi: u64) -> PyResult<Self> {
        let scope = match scope {
            "file" => Scope::File,
            "function" => Scope::Function,
            other => return Err(PyValueError::new_err(format!("scope must be 'file' or 'function', got {other:?}"))),
        };
        if range_lo > range_hi {
            return Err(py_err(tokompiler::Error::EmptyRange { lo: range_lo, hi: range_hi }));
        }
        Ok(PyTokenizer {
            inner: Pipeline::new(seed, AnonymizerConfig { range_lo, range_hi, scope }),
        })
    }

    #[getter]
    fn seed(&self) -> u64 {
        self.inner.seed
    }

    /// One result for file scope, one per function for function scope.
    #[pyo3(signature = (text, language, unit_id = "input"))]
    fn tokenize(&self, py: Python<'_>, text: &str, language: &str, unit_id: &str) -> PyResult<Vec<PyTokenized>> {
        let language: Language = language.parse().map_err(py_err)?;
        let unit = SourceUnit::new(unit_id, language, unit_id, text);
        let out = py.detach(|| self.inner.tokenize(&unit)).map_err(py_err)?;
        Ok(out.into_iter().map(|inner| PyTokenized { inner }).collect())
    }
}

#[pyclass(name = "TokenizedUnit", module = "tokompiler", frozen)]
struct PyTokenized {
    inner: TokenizedUnit,
}

#[pymethods]
impl PyTokenized {
    #[getter]
    fn unit_id(&self) -> &str {
        &self.inner.unit.id
    }

    #[getter]
    fn language(&self) -> &'static str {
        self.inner.unit.language.name()
    }

    /// Anonymized source text, original layout kept.
    #[getter]
    fn anonymized(&self) -> &str {
        &self.inner.anonymized.text
    }

    #[getter]
    fn normalized(&self) -> &str {
        &self.inner.normalized
    }

    #[getter]
    fn tokens(&self) -> Vec<String> {
        self.inner.stream.tokens.clone()
    }

    #[getter]
    fn dictionary(&self) -> PyDictionary {
        PyDictionary {
            inner: self.inner.anonymized.dictionary.clone(),
        }
    }

    fn restore(&self) -> PyResult<String> {
        anonymizer::restore(&self.inner.stream, &self.inner.anonymized.dictionary).map_err(py_err)
    }

    fn __len__(&self) -> usize {
        self.inner.stream.len()
    }

    fn __repr__(&self) -> String {
        format!("TokenizedUnit({:?}, {} tokens)", self.inner.unit.id, self.inner.stream.len())
    }
}

/// Replacement token ↔ original lexeme for one unit.
#[pyclass(name = "ChangeDictionary", module = "tokompiler", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyDictionary {
    inner: ChangeDictionary,
}

#[pymethods]
impl PyDictionary {
    #[staticmethod]
    fn from_json(json: &str) -> PyResult<Self> {
        Ok(PyDictionary {
            inner: ChangeDictionary::from_json(json).map_err(py_err)?,
        })
    }

    fn to_json(&self) -> PyResult<String> {
        self.inner.to_json().map_err(py_err)
    }

    #[getter]
    fn unit_id(&self) -> &str {
        self.inner.unit_id()
    }

    #[getter]
    fn seed(&self) -> u64 {
        self.inner.seed()
    }

    /// `(replacement, original, category)` triples.
    fn entries(&self) -> Vec<(String, String, String)> {
        self.inner
            .entries()
            .iter()
            .map(|e| (e.replacement.clone(), e.original.clone(), e.category.to_string()))
            .collect()
    }

    fn original(&self, replacement: &str) -> Option<String> {
        self.inner.original(replacement).map(str::to_string)
    }

    fn replacement(&self, original: &str) -> Option<String> {
        self.inner.replacement(original).map(str::to_string)
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }
}

/// Restores a token list (as produced by `TokenizedUnit.tokens`) to
/// space-joined source text.
#[pyfunction]
fn restore(tokens: Vec<String>, dictionary: &PyDictionary) -> PyResult<String> {
    anonymizer::restore(&TokenStream::new(dictionary.inner.unit_id(), tokens), &dictionary.inner).map_err(py_err)
}

#[pyclass(name = "Vocabulary", module = "tokompiler", frozen)]
struct PyVocabulary {
    inner: Vocabulary,
}

#[pymethods]
impl PyVocabulary {
    #[staticmethod]
    #[pyo3(signature = (streams, include_number_range = true, include_category_words = true))]
    fn build(streams: Vec<Vec<String>>, include_number_range: bool, include_category_words: bool) -> PyResult<Self> {
        let streams: Vec<TokenStream> = streams.into_iter().map(|t| TokenStream::new("", t)).collect();
        let config = VocabConfig {
            include_number_range,
            include_category_words,
            ..VocabConfig::default()
        };
        Ok(PyVocabulary {
            inner: Vocabulary::build(&streams, &config).map_err(py_err)?,
        })
    }

    #[staticmethod]
    fn load(path: PathBuf) -> PyResult<Self> {
        Ok(PyVocabulary {
            inner: Vocabulary::load(&path).map_err(py_err)?,
        })
    }

    fn save(&self, path: PathBuf) -> PyResult<()> {
        self.inner.save(&path).map_err(py_err)
    }

    /// Unknown tokens map to the `<unk>` id.
    fn encode(&self, tokens: Vec<String>) -> Vec<u32> {
        lexicalizer::encode(&TokenStream::new("", tokens), &self.inner)
            .ids
            .unwrap_or_default()
    }

    fn decode(&self, ids: Vec<u32>) -> PyResult<Vec<String>> {
        lexicalizer::decode(&ids, &self.inner).map_err(py_err)
    }

    fn id(&self, token: &str) -> Option<u32> {
        self.inner.id(token)
    }

    fn tokens(&self) -> Vec<String> {
        self.inner.tokens().to_vec()
    }

    fn __contains__(&self, token: &str) -> bool {
        self.inner.contains(token)
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }
}

/// Byte-level BPE baseline.
#[pyclass(name = "BpeModel", module = "tokompiler", frozen)]
struct PyBpe {
    inner: BpeModel,
}

#[pymethods]
impl PyBpe {
    #[staticmethod]
    #[pyo3(signature = (docs, target_size = DEFAULT_TARGET_SIZE, sample_fraction = DEFAULT_SAMPLE_FRACTION, seed = DEFAULT_SEED))]
    fn train(py: Python<'_>, docs: Vec<String>, target_size: usize, sample_fraction: f64, seed: u64) -> PyResult<Self> {
        let inner = py
            .detach(|| bpe::train_bpe(&docs, target_size, sample_fraction, seed))
            .map_err(py_err)?;
        Ok(PyBpe { inner })
    }

    #[staticmethod]
    fn load(path: PathBuf) -> PyResult<Self> {
        Ok(PyBpe {
            inner: BpeModel::load(&path).map_err(py_err)?,
        })
    }

    fn save(&self, path: PathBuf) -> PyResult<()> {
        self.inner.save(&path).map_err(py_err)
    }

    fn encode(&self, text: &str) -> Vec<u32> {
        self.inner.encode(text)
    }

    fn decode<'py>(&self, py: Python<'py>, ids: Vec<u32>) -> PyResult<Bound<'py, PyBytes>> {
        let bytes = self.inner.decode(&ids).map_err(py_err)?;
        Ok(PyBytes::new(py, &bytes))
    }

    #[getter]
    fn vocab_size(&self) -> usize {
        self.inner.vocab_size()
    }

    #[getter]
    fn target_size(&self) -> usize {
        self.inner.target_size()
    }

    #[getter]
    fn num_merges(&self) -> usize {
        self.inner.merges().len()
    }
}

/// Runs ingestion, filtering and function extraction over `root`; returns
/// the statistics report as JSON.
#[pyfunction]
fn corpus_stats(py: Python<'_>, root: PathBuf) -> PyResult<String> {
    let run = py
        .detach(|| corpus::run(&root, &LanguageMap::default(), &FilterConfig::default()))
        .map_err(py_err)?;
    serde_json::to_string_pretty(&run.stats).map_err(|e| PyValueError::new_err(e.to_string()))
}

/// Same as the `tokompiler` executable; returns its exit code.
#[pyfunction]
fn main(py: Python<'_>, args: Vec<String>) -> i32 {
    py.detach(|| tokompiler::cli::run(std::iter::once("tokompiler".to_string()).chain(args)))
}

#[pymodule]
#[pyo3(name = "tokompiler")]
fn tokompiler_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("DEFAULT_SEED", DEFAULT_SEED)?;
    m.add_class::<PyTokenizer>()?;
    m.add_class::<PyTokenized>()?;
    m.add_class::<PyDictionary>()?;
    m.add_class::<PyVocabulary>()?;
    m.add_class::<PyBpe>()?;
    m.add_function(wrap_pyfunction!(restore, m)?)?;
    m.add_function(wrap_pyfunction!(corpus_stats, m)?)?;
    m.add_function(wrap_pyfunction!(main, m)?)?;
    Ok(())
}
