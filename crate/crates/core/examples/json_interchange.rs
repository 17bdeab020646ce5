//! Writes a doubling as JSON, reads it back and checks the bytes agree.

use hopf_forge::doubling::{double_direct, DoublingInput};
use hopf_forge::groups::{sn_group, GroupAutomorphism};
use hopf_forge::json;

fn main() {
    let (g, _) = sn_group(2).unwrap();
    let id = GroupAutomorphism::identity(&g);
    let k = double_direct(&DoublingInput::new(g, id).unwrap());
    let text = json::emit(&k);
    print!("{text}");
    let back = json::parse(&text).unwrap();
    println!("round trip identical: {}", json::emit(&back) == text);
}
