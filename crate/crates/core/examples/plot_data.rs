//! CSV data for plotting E_b(-u), written to a file given as the first
//! argument or to standard output.

fn main() -> mlv::Result<()> {
    let csv = mlv::cli::plot_ml_csv("0.25,0.5,0.75,1", "0:10", 201)?;
    match std::env::args().nth(1) {
        Some(path) => std::fs::write(&path, csv).map_err(|e| mlv::Error::Io(e.to_string()))?,
        None => print!("{csv}"),
    }
    Ok(())
}
