fn main() {
    nestcount::cli::main()
}
