public class Copy {
    public int one() {
        return 1;
    }
}
