//! Site census: block, wood, and stone frequencies, water and fertile
//! fractions, and a biome-weighted average temperature. Generators read a
//! [`SiteProfile`] to adapt materials, crops, and farm density to the map.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;

use once_cell::race::OnceBox;

use crate::block::{self, BlockCategory, BlockTable};
use crate::geom::{BoundingBox, Coord};
use crate::terrain::compute_terrain;
use crate::world::VoxelWorld;

/// Temperature assumed for biome ids missing from the table.
pub const DEFAULT_TEMPERATURE: f64 = 0.80;

/// Biome id -> (name, temperature), parsed from a text asset.
#[derive(Debug)]
pub struct BiomeTable {
    entries: BTreeMap<u8, (String, f64)>,
}

static DEFAULT_BIOMES_TEXT: &str = include_str!("../assets/biomes.txt");

impl BiomeTable {
    pub fn parse(text: &str) -> Result<BiomeTable, String> {
        let mut entries = BTreeMap::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut parts = line.split_whitespace();
            let bad = || format!("biome table line {}: expected '<id> <name> <temp>'", lineno + 1);
            let id: u8 = parts.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
            let name = parts.next().ok_or_else(bad)?;
            let temp: f64 = parts.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
            if parts.next().is_some() {
                return Err(bad());
            }
            if entries.insert(id, (String::from(name), temp)).is_some() {
                return Err(format!("biome table line {}: duplicate id {id}", lineno + 1));
            }
        }
        Ok(BiomeTable { entries })
    }

    pub fn builtin() -> &'static BiomeTable {
        static TABLE: OnceBox<BiomeTable> = OnceBox::new();
        TABLE.get_or_init(|| {
            Box::new(BiomeTable::parse(DEFAULT_BIOMES_TEXT).expect("builtin biomes.txt is valid"))
        })
    }

    pub fn temperature(&self, id: u8) -> f64 {
        self.entries.get(&id).map(|(_, t)| *t).unwrap_or(DEFAULT_TEMPERATURE)
    }

    pub fn name(&self, id: u8) -> Option<&str> {
        self.entries.get(&id).map(|(n, _)| n.as_str())
    }

    /// Id of a named biome, for test and testmap construction.
    pub fn id_of(&self, name: &str) -> Option<u8> {
        self.entries.iter().find(|(_, (n, _))| n == name).map(|(id, _)| *id)
    }
}

/// What the site is made of. All frequency tables sum to 1 when non-empty.
#[derive(Clone, Debug, PartialEq)]
pub struct SiteProfile {
    /// Frequency of every non-air block name in the region.
    pub block_freq: BTreeMap<String, f64>,
    /// Frequency by wood species over species-bearing blocks.
    pub wood_freq: BTreeMap<String, f64>,
    /// Frequency by stone kind over stone-bearing blocks.
    pub stone_freq: BTreeMap<String, f64>,
    /// Fraction of surface columns that are water.
    pub water_fraction: f64,
    /// Fraction of surface columns whose ground block is grass/dirt-class.
    pub fertile_fraction: f64,
    /// Biome-frequency-weighted mean temperature.
    pub avg_temperature: f64,
    /// Frequency of each biome id over the region's columns.
    pub biome_freq: BTreeMap<u8, f64>,
}

impl SiteProfile {
    /// Most frequent wood species, ties broken by name order; `None` when
    /// the site has no wood at all.
    pub fn dominant_wood(&self) -> Option<&str> {
        argmax(&self.wood_freq)
    }

    pub fn dominant_stone(&self) -> Option<&str> {
        argmax(&self.stone_freq)
    }
}

fn argmax(table: &BTreeMap<String, f64>) -> Option<&str> {
    let mut best: Option<(&str, f64)> = None;
    for (name, &f) in table {
        match best {
            Some((_, bf)) if f <= bf => {}
            _ => best = Some((name, f)),
        }
    }
    best.map(|(n, _)| n)
}

/// Counts everything in `region` and derives the adaptation profile.
pub fn census(world: &VoxelWorld, region: BoundingBox) -> SiteProfile {
    assert!(world.bounds().contains_box(&region), "region outside world");
    let table = BlockTable::builtin();
    let biomes = BiomeTable::builtin();

    let mut block_counts: BTreeMap<String, u64> = BTreeMap::new();
    let mut wood_counts: BTreeMap<String, u64> = BTreeMap::new();
    let mut stone_counts: BTreeMap<String, u64> = BTreeMap::new();
    let mut non_air: u64 = 0;

    for c in region.cells() {
        let name = world.name_at(c);
        if table.category(name) == BlockCategory::Air {
            continue;
        }
        non_air += 1;
        *block_counts.entry(String::from(name)).or_insert(0) += 1;
        if let Some(sp) = block::wood_species_of(name) {
            *wood_counts.entry(String::from(sp)).or_insert(0) += 1;
        }
        if let Some(kind) = block::stone_kind_of(name) {
            *stone_counts.entry(String::from(kind)).or_insert(0) += 1;
        }
    }

    let maps = compute_terrain(world, region);
    let rect = region.footprint();
    let columns = rect.area() as f64;
    let mut water_cols = 0u64;
    let mut fertile_cols = 0u64;
    let mut biome_counts: BTreeMap<u8, u64> = BTreeMap::new();
    for (x, z) in rect.cells() {
        if maps.is_water(x, z) {
            water_cols += 1;
        } else {
            let g = maps.ground_at(x, z);
            let name = world.name_at(Coord::new(x, g, z));
            if block::is_fertile_ground(name) {
                fertile_cols += 1;
            }
        }
        let b = world.biome_at(x, z).expect("column in bounds");
        *biome_counts.entry(b).or_insert(0) += 1;
    }

    let to_freq = |counts: BTreeMap<String, u64>, total: u64| -> BTreeMap<String, f64> {
        counts
            .into_iter()
            .map(|(k, v)| (k, v as f64 / total as f64))
            .collect()
    };
    let wood_total: u64 = wood_counts.values().sum();
    let stone_total: u64 = stone_counts.values().sum();

    let biome_freq: BTreeMap<u8, f64> = biome_counts
        .into_iter()
        .map(|(k, v)| (k, v as f64 / columns))
        .collect();
    let avg_temperature = biome_freq
        .iter()
        .map(|(&id, &f)| f * biomes.temperature(id))
        .sum();

    SiteProfile {
        block_freq: if non_air > 0 { to_freq(block_counts, non_air) } else { BTreeMap::new() },
        wood_freq: if wood_total > 0 { to_freq(wood_counts, wood_total) } else { BTreeMap::new() },
        stone_freq: if stone_total > 0 {
            to_freq(stone_counts, stone_total)
        } else {
            BTreeMap::new()
        },
        water_fraction: water_cols as f64 / columns,
        fertile_fraction: fertile_cols as f64 / columns,
        avg_temperature,
        biome_freq,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    #[test]
    fn biome_table_lookups() {
        let t = BiomeTable::builtin();
        assert_eq!(t.temperature(2), 2.00); // desert
        assert_eq!(t.name(21), Some("jungle"));
        assert_eq!(t.id_of("mesa"), Some(37));
        assert_eq!(t.temperature(200), DEFAULT_TEMPERATURE);
    }

    #[test]
    fn all_oak_region_gives_unit_wood_freq() {
        let mut w = VoxelWorld::new(4, 4, 4);
        w.fill_box(w.bounds(), "minecraft:oak_log").unwrap();
        let p = census(&w, w.bounds());
        assert_eq!(p.wood_freq.len(), 1);
        assert!((p.wood_freq["oak"] - 1.0).abs() < 1e-12);
        assert_eq!(p.dominant_wood(), Some("oak"));
    }

    #[test]
    fn half_desert_half_jungle_temperature_is_the_mean() {
        let mut w = VoxelWorld::new(4, 2, 4);
        let desert = BiomeTable::builtin().id_of("desert").unwrap();
        let jungle = BiomeTable::builtin().id_of("jungle").unwrap();
        for (x, z) in w.footprint().cells() {
            w.set_biome(x, z, if x < 2 { desert } else { jungle }).unwrap();
        }
        let p = census(&w, w.bounds());
        let want = (2.00 + 0.95) / 2.0;
        assert!((p.avg_temperature - want).abs() < 1e-12, "{}", p.avg_temperature);
    }

    #[test]
    fn all_air_region_yields_empty_tables_and_biome_temperature() {
        let mut w = VoxelWorld::new(4, 4, 4);
        let jungle = BiomeTable::builtin().id_of("jungle").unwrap();
        for (x, z) in w.footprint().cells() {
            w.set_biome(x, z, jungle).unwrap();
        }
        let p = census(&w, w.bounds());
        assert!(p.block_freq.is_empty());
        assert!(p.wood_freq.is_empty());
        assert!((p.avg_temperature - 0.95).abs() < 1e-12);
    }

    // Oracle: exhaustive per-name counting with its own loop.
    #[test]
    fn block_freq_matches_count_oracle() {
        let names = [
            "minecraft:air",
            "minecraft:stone",
            "minecraft:dirt",
            "minecraft:oak_log",
            "minecraft:jungle_log",
            "minecraft:water",
            "minecraft:sandstone",
        ];
        let mut rng = crate::rng::rng_from_seed(77);
        for _ in 0..10 {
            let mut w = VoxelWorld::new(8, 8, 8);
            for c in w.bounds().cells() {
                w.set_block(c, names[rng.gen_range(0..names.len())]).unwrap();
            }
            let p = census(&w, w.bounds());

            let mut counts: BTreeMap<&str, u64> = BTreeMap::new();
            let mut non_air = 0u64;
            for c in w.bounds().cells() {
                let n = w.name_at(c);
                if n != "minecraft:air" {
                    non_air += 1;
                    *counts.entry(names.iter().find(|x| **x == n).unwrap()).or_insert(0) += 1;
                }
            }
            assert_eq!(p.block_freq.len(), counts.len());
            for (name, count) in counts {
                let want = count as f64 / non_air as f64;
                assert!((p.block_freq[name] - want).abs() < 1e-12);
            }
            // Conservation: frequencies sum to one.
            let sum: f64 = p.block_freq.values().sum();
            assert!((sum - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn fertile_and_water_fractions() {
        // 4x4 world: half the columns grass-topped, half water over stone.
        let mut w = VoxelWorld::new(4, 8, 4);
        w.fill_box(
            BoundingBox::new(Coord::new(0, 0, 0), Coord::new(3, 2, 3)),
            "minecraft:stone",
        )
        .unwrap();
        for (x, z) in w.footprint().cells() {
            if x < 2 {
                w.set_block(Coord::new(x, 3, z), "minecraft:grass_block").unwrap();
            } else {
                w.set_block(Coord::new(x, 3, z), "minecraft:water").unwrap();
            }
        }
        let p = census(&w, w.bounds());
        assert!((p.water_fraction - 0.5).abs() < 1e-12);
        assert!((p.fertile_fraction - 0.5).abs() < 1e-12);
    }

    #[test]
    fn dominant_wood_breaks_ties_by_name() {
        let mut w = VoxelWorld::new(2, 2, 2);
        w.set_block(Coord::new(0, 0, 0), "minecraft:spruce_log").unwrap();
        w.set_block(Coord::new(1, 0, 0), "minecraft:birch_log").unwrap();
        let p = census(&w, w.bounds());
        assert_eq!(p.dominant_wood(), Some("birch"));
    }
}
