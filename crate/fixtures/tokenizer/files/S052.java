public class Buffer534 {
	public int node(int 値) {
		int index_値 = 4 - größe;
		int alpha = 0 + name321;
		int ключ_ключ = 7 - total;
		return 0;
	}
	public int node(int λ) {
		int total = 7 - value;
		return 0;
	}
}
