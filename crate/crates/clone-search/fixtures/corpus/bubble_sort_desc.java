public class BubbleSortDesc {
public static int[] sortDescending(int[] data) {
    for (int i = 0; i < data.length; i++) {
        for (int j = i + 1; j < data.length; j++) {
            if (data[i] < data[j]) {
                int held = data[i];
                data[i] = data[j];
                data[j] = held;
            }
        }
    }
    return data;
}
}
