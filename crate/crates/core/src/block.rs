//! Block names, categories, and the static classification table.
//!
//! Blocks are namespaced name strings ("minecraft:oak_log"). Every name maps
//! to exactly one [`BlockCategory`] through a table shipped as a text asset,
//! so generators, terrain analysis, and tests all agree on what counts as
//! ground, vegetation, or water. Names absent from the table classify as
//! [`BlockCategory::Crafted`].

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use core::fmt;

use once_cell::race::OnceBox;

/// Canonical air block name.
pub const AIR: &str = "minecraft:air";

/// Coarse behavioural class of a block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BlockCategory {
    Solid,
    Vegetation,
    Water,
    Lava,
    Air,
    /// Partial or decorative placed object (door, torch, fence...). Ignored
    /// by ground detection, like vegetation, but never auto-cleared.
    Crafted,
}

impl fmt::Display for BlockCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            BlockCategory::Solid => "solid",
            BlockCategory::Vegetation => "vegetation",
            BlockCategory::Water => "water",
            BlockCategory::Lava => "lava",
            BlockCategory::Air => "air",
            BlockCategory::Crafted => "crafted",
        };
        write!(f, "{s}")
    }
}

impl BlockCategory {
    fn parse(s: &str) -> Option<BlockCategory> {
        Some(match s {
            "solid" => BlockCategory::Solid,
            "vegetation" => BlockCategory::Vegetation,
            "water" => BlockCategory::Water,
            "lava" => BlockCategory::Lava,
            "air" => BlockCategory::Air,
            "crafted" => BlockCategory::Crafted,
            _ => return None,
        })
    }
}

/// Wood species recognized by material adaptation, in canonical order.
pub const WOOD_SPECIES: [&str; 6] = ["oak", "spruce", "birch", "jungle", "acacia", "dark_oak"];

/// Stone kinds recognized by material adaptation.
pub const STONE_KINDS: [&str; 9] = [
    "stone",
    "cobblestone",
    "granite",
    "diorite",
    "andesite",
    "sandstone",
    "red_sandstone",
    "terracotta",
    "mud_bricks",
];

/// The parsed classification table.
#[derive(Debug)]
pub struct BlockTable {
    categories: BTreeMap<String, BlockCategory>,
}

static DEFAULT_TABLE_TEXT: &str = include_str!("../assets/blocks.txt");

impl BlockTable {
    /// Parses a table from its text form. Lines are `<name> <category>`;
    /// blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<BlockTable, String> {
        let mut categories = BTreeMap::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut parts = line.split_whitespace();
            let (name, cat) = match (parts.next(), parts.next(), parts.next()) {
                (Some(n), Some(c), None) => (n, c),
                _ => return Err(format!("blocks table line {}: expected '<name> <category>'", lineno + 1)),
            };
            let cat = BlockCategory::parse(cat)
                .ok_or_else(|| format!("blocks table line {}: unknown category '{cat}'", lineno + 1))?;
            if categories.insert(String::from(name), cat).is_some() {
                return Err(format!("blocks table line {}: duplicate entry '{name}'", lineno + 1));
            }
        }
        Ok(BlockTable { categories })
    }

    /// The table compiled into the crate.
    pub fn builtin() -> &'static BlockTable {
        static TABLE: OnceBox<BlockTable> = OnceBox::new();
        TABLE.get_or_init(|| {
            Box::new(BlockTable::parse(DEFAULT_TABLE_TEXT).expect("builtin blocks.txt is valid"))
        })
    }

    /// Category of `name`. State suffixes (`[...]`) are stripped before
    /// lookup; unknown names are `Crafted`.
    pub fn category(&self, name: &str) -> BlockCategory {
        let base = base_name(name);
        self.categories.get(base).copied().unwrap_or(BlockCategory::Crafted)
    }

    pub fn is_solid(&self, name: &str) -> bool {
        self.category(name) == BlockCategory::Solid
    }

    pub fn len(&self) -> usize {
        self.categories.len()
    }

    pub fn is_empty(&self) -> bool {
        self.categories.is_empty()
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.categories.keys().map(|s| s.as_str())
    }
}

/// Strips a trailing block-state suffix: `minecraft:wheat[age=3]` -> `minecraft:wheat`.
pub fn base_name(name: &str) -> &str {
    match name.find('[') {
        Some(i) => &name[..i],
        None => name,
    }
}

/// Wood species of a block name, if it carries one ("minecraft:jungle_log" -> "jungle").
pub fn wood_species_of(name: &str) -> Option<&'static str> {
    let base = base_name(name);
    let local = base.strip_prefix("minecraft:").unwrap_or(base);
    // dark_oak must be tested before oak: "dark_oak_log" contains both.
    for sp in ["dark_oak", "oak", "spruce", "birch", "jungle", "acacia"] {
        if let Some(rest) = local.strip_prefix(sp) {
            if rest.is_empty() || rest.starts_with('_') {
                return WOOD_SPECIES.iter().find(|s| **s == sp).copied();
            }
        }
    }
    None
}

/// True for tree trunk blocks.
pub fn is_log(name: &str) -> bool {
    base_name(name).ends_with("_log")
}

/// True for tree canopy blocks.
pub fn is_leaves(name: &str) -> bool {
    base_name(name).ends_with("_leaves")
}

/// Stone kind of a block name, if it carries one.
pub fn stone_kind_of(name: &str) -> Option<&'static str> {
    let base = base_name(name);
    let local = base.strip_prefix("minecraft:").unwrap_or(base);
    // Longest-match first so "red_sandstone" does not resolve as "sandstone"
    // and "mossy_cobblestone" counts as cobblestone.
    match local {
        "stone" | "smooth_stone" => Some("stone"),
        "cobblestone" | "mossy_cobblestone" => Some("cobblestone"),
        "granite" => Some("granite"),
        "diorite" => Some("diorite"),
        "andesite" => Some("andesite"),
        "red_sandstone" => Some("red_sandstone"),
        "sandstone" => Some("sandstone"),
        "terracotta" => Some("terracotta"),
        "mud_bricks" => Some("mud_bricks"),
        other => {
            if other.ends_with("_terracotta") {
                Some("terracotta")
            } else {
                None
            }
        }
    }
}

/// Ground blocks that count as fertile for the site census.
pub fn is_fertile_ground(name: &str) -> bool {
    matches!(
        base_name(name),
        "minecraft:grass_block"
            | "minecraft:dirt"
            | "minecraft:coarse_dirt"
            | "minecraft:podzol"
            | "minecraft:farmland"
            | "minecraft:mud"
    )
}
