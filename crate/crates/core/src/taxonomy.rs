//! Canonical construct taxonomy shared by every supported language.
//!
//! The taxonomy is fixed: 22 construct kinds, each with a stable numeric id.
//! Feature vectors are laid out as one 12-metric block per kind in id order,
//! so the flattened width is always `FEATURE_WIDTH` regardless of language.
//! Kinds with no counterpart in a language (e.g. `class-definition` in C)
//! simply never occur; their blocks stay all-zero.

use serde::{Deserialize, Serialize};

/// Version of the construct taxonomy, embedded in output artifacts.
pub const TAXONOMY_VERSION: &str = "1";

/// Version of the knowledge-store table schema.
pub const SCHEMA_VERSION: &str = "1";

/// Number of canonical construct kinds.
pub const KIND_COUNT: usize = 22;

/// Statistics recorded per kind: {max,min,avg,stdDev} x {Count,Depth,Length}.
pub const METRICS_PER_KIND: usize = 12;

/// Flattened numeric width of one feature vector.
pub const FEATURE_WIDTH: usize = KIND_COUNT * METRICS_PER_KIND;

/// One of the 22 canonical construct kinds.
///
/// The discriminant is the registered construct id and never changes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
#[repr(u8)]
pub enum ConstructKind {
    FunctionDefinition = 0,
    ClassDefinition = 1,
    IfStatement = 2,
    ElseClause = 3,
    SwitchStatement = 4,
    ForLoop = 5,
    WhileLoop = 6,
    DoWhileLoop = 7,
    TryBlock = 8,
    CatchClause = 9,
    ReturnStatement = 10,
    BreakStatement = 11,
    ContinueStatement = 12,
    CallExpression = 13,
    Identifier = 14,
    NumericLiteral = 15,
    StringLiteral = 16,
    Comment = 17,
    BinaryOperator = 18,
    UnaryOperator = 19,
    Block = 20,
    Parameter = 21,
}

impl ConstructKind {
    /// All kinds in registered-id order.
    pub const ALL: [ConstructKind; KIND_COUNT] = [
        ConstructKind::FunctionDefinition,
        ConstructKind::ClassDefinition,
        ConstructKind::IfStatement,
        ConstructKind::ElseClause,
        ConstructKind::SwitchStatement,
        ConstructKind::ForLoop,
        ConstructKind::WhileLoop,
        ConstructKind::DoWhileLoop,
        ConstructKind::TryBlock,
        ConstructKind::CatchClause,
        ConstructKind::ReturnStatement,
        ConstructKind::BreakStatement,
        ConstructKind::ContinueStatement,
        ConstructKind::CallExpression,
        ConstructKind::Identifier,
        ConstructKind::NumericLiteral,
        ConstructKind::StringLiteral,
        ConstructKind::Comment,
        ConstructKind::BinaryOperator,
        ConstructKind::UnaryOperator,
        ConstructKind::Block,
        ConstructKind::Parameter,
    ];

    /// Registered construct id.
    pub fn id(self) -> u8 {
        self as u8
    }

    pub fn from_id(id: u8) -> Option<ConstructKind> {
        Self::ALL.get(id as usize).copied()
    }

    /// Canonical kebab-case name, as registered in the constructs table.
    pub fn name(self) -> &'static str {
        match self {
            ConstructKind::FunctionDefinition => "function-definition",
            ConstructKind::ClassDefinition => "class-definition",
            ConstructKind::IfStatement => "if-statement",
            ConstructKind::ElseClause => "else-clause",
            ConstructKind::SwitchStatement => "switch-statement",
            ConstructKind::ForLoop => "for-loop",
            ConstructKind::WhileLoop => "while-loop",
            ConstructKind::DoWhileLoop => "do-while-loop",
            ConstructKind::TryBlock => "try-block",
            ConstructKind::CatchClause => "catch-clause",
            ConstructKind::ReturnStatement => "return-statement",
            ConstructKind::BreakStatement => "break-statement",
            ConstructKind::ContinueStatement => "continue-statement",
            ConstructKind::CallExpression => "call-expression",
            ConstructKind::Identifier => "identifier",
            ConstructKind::NumericLiteral => "numeric-literal",
            ConstructKind::StringLiteral => "string-literal",
            ConstructKind::Comment => "comment",
            ConstructKind::BinaryOperator => "binary-operator",
            ConstructKind::UnaryOperator => "unary-operator",
            ConstructKind::Block => "block",
            ConstructKind::Parameter => "parameter",
        }
    }

    pub fn from_name(name: &str) -> Option<ConstructKind> {
        Self::ALL.iter().copied().find(|k| k.name() == name)
    }
}

/// Metric names in block order, matching the stored column suffixes.
pub const METRIC_NAMES: [&str; METRICS_PER_KIND] = [
    "maxCount",
    "minCount",
    "avgCount",
    "stdDevCount",
    "maxDepth",
    "minDepth",
    "avgDepth",
    "stdDevDepth",
    "maxLength",
    "minLength",
    "avgLength",
    "stdDevLength",
];

/// The 264 feature column names `<kindName>_<metric>` in taxonomy order.
pub fn feature_column_names() -> Vec<String> {
    let mut cols = Vec::with_capacity(FEATURE_WIDTH);
    for kind in ConstructKind::ALL {
        for metric in METRIC_NAMES {
            cols.push(format!("{}_{}", kind.name(), metric));
        }
    }
    cols
}

/// A supported source language.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Language {
    C,
    Cpp,
    Java,
    Python,
}

impl Language {
    pub const ALL: [Language; 4] = [Language::C, Language::Cpp, Language::Java, Language::Python];

    pub fn id(self) -> u8 {
        match self {
            Language::C => 0,
            Language::Cpp => 1,
            Language::Java => 2,
            Language::Python => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Language::C => "c",
            Language::Cpp => "cpp",
            Language::Java => "java",
            Language::Python => "python",
        }
    }

    /// Maps a file extension (without dot) to its language.
    ///
    /// `.c`/`.h` -> C, `.cpp`/`.cc`/`.hpp` -> C++, `.java` -> Java, `.py` -> Python.
    pub fn from_extension(ext: &str) -> Option<Language> {
        match ext {
            "c" | "h" => Some(Language::C),
            "cpp" | "cc" | "hpp" => Some(Language::Cpp),
            "java" => Some(Language::Java),
            "py" => Some(Language::Python),
            _ => None,
        }
    }
}

impl std::str::FromStr for Language {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "c" => Ok(Language::C),
            "cpp" | "c++" | "cxx" => Ok(Language::Cpp),
            "java" => Ok(Language::Java),
            "python" | "py" => Ok(Language::Python),
            other => Err(format!("unsupported language: {other}")),
        }
    }
}

impl std::fmt::Display for Language {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_stable_and_unique() {
        for (i, kind) in ConstructKind::ALL.iter().enumerate() {
            assert_eq!(kind.id() as usize, i);
            assert_eq!(ConstructKind::from_id(kind.id()), Some(*kind));
        }
        assert_eq!(ConstructKind::ALL.len(), 22);
    }

    #[test]
    fn names_round_trip() {
        for kind in ConstructKind::ALL {
            assert_eq!(ConstructKind::from_name(kind.name()), Some(kind));
        }
    }

    #[test]
    fn feature_columns_have_fixed_width() {
        let cols = feature_column_names();
        assert_eq!(cols.len(), 264);
        assert_eq!(cols[0], "function-definition_maxCount");
        assert_eq!(cols[263], "parameter_stdDevLength");
    }

    #[test]
    fn extension_mapping() {
        assert_eq!(Language::from_extension("h"), Some(Language::C));
        assert_eq!(Language::from_extension("hpp"), Some(Language::Cpp));
        assert_eq!(Language::from_extension("txt"), None);
    }
}
