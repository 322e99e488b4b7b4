fn main() {
    println!("skein cli placeholder");
}
