fn main() {
    let crate_dir = std::env::var("CARGO_MANIFEST_DIR").unwrap();
    cbindgen::generate(&crate_dir)
        .expect("unable to generate C header")
        .write_to_file(
            std::path::Path::new(&crate_dir)
                .join("include")
                .join("sepinv.h"),
        );
    println!("cargo:rerun-if-changed=src/lib.rs");
    println!("cargo:rerun-if-changed=cbindgen.toml");
}
