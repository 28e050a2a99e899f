//! Rendering of layer decompositions: free-form text for people, a stable
//! JSON schema for tools.

use canalization::LayerDecomposition;
use serde::Serialize;

#[derive(Serialize)]
struct JsonVar {
    index: usize,
    input: u8,
}

#[derive(Serialize)]
struct JsonLayer {
    output: u8,
    vars: Vec<JsonVar>,
}

/// The stable JSON contract. Field names and meanings do not change between
/// releases; `name` appears only for named file entries.
#[derive(Serialize)]
struct JsonDecomposition<'a> {
    #[serde(skip_serializing_if = "Option::is_none")]
    name: Option<&'a str>,
    n: usize,
    depth: usize,
    num_layers: usize,
    layer_vector: Vec<usize>,
    layers: Vec<JsonLayer>,
    core: String,
    fictitious: Vec<usize>,
    is_ncf: bool,
}

pub fn to_json(name: Option<&str>, d: &LayerDecomposition) -> String {
    let value = JsonDecomposition {
        name,
        n: d.n,
        depth: d.depth(),
        num_layers: d.layers.len(),
        layer_vector: d.layer_vector(),
        layers: d
            .layers
            .iter()
            .map(|layer| JsonLayer {
                output: layer.output as u8,
                vars: layer
                    .entries
                    .iter()
                    .map(|&(index, input)| JsonVar {
                        index,
                        input: input as u8,
                    })
                    .collect(),
            })
            .collect(),
        core: d.core.render(),
        fictitious: d.fictitious.clone(),
        is_ncf: d.is_nested_canalizing(),
    };
    serde_json::to_string(&value).expect("decomposition serializes")
}

pub fn to_human(name: Option<&str>, d: &LayerDecomposition) -> String {
    let mut out = String::new();
    if let Some(name) = name {
        out.push_str(&format!("name: {name}\n"));
    }
    out.push_str(&format!("n: {}\n", d.n));
    out.push_str(&format!("depth: {}\n", d.depth()));
    out.push_str(&format!("layers: {}\n", d.layers.len()));
    let vector: Vec<String> = d.layer_vector().iter().map(|k| k.to_string()).collect();
    out.push_str(&format!("layer vector: ({})\n", vector.join(", ")));
    for (i, layer) in d.layers.iter().enumerate() {
        let entries: Vec<String> = layer
            .entries
            .iter()
            .map(|&(v, a)| format!("x{v}={}", a as u8))
            .collect();
        out.push_str(&format!(
            "layer {}: output {}: {}\n",
            i + 1,
            layer.output as u8,
            entries.join(" ")
        ));
    }
    out.push_str(&format!("core: {}\n", d.core.render()));
    if d.fictitious.is_empty() {
        out.push_str("fictitious: none\n");
    } else {
        let list: Vec<String> = d.fictitious.iter().map(|v| format!("x{v}")).collect();
        out.push_str(&format!("fictitious: {}\n", list.join(" ")));
    }
    out.push_str(&format!(
        "nested canalizing: {}\n",
        if d.is_nested_canalizing() { "yes" } else { "no" }
    ));
    out
}
