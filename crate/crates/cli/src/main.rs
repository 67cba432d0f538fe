fn main() {
    println!("tgrip");
}
